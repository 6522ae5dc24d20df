//! Root systems of semisimple g built from Cartan matrices: positive roots by
//! closure, the invariant form normalized so long roots have squared length 2,
//! Weyl groups by orbit enumeration, and the Weyl dimension formula.
//!
//! Weights are stored in the basis of simple roots. Cartan matrix entries follow
//! `A[i][j] = <alpha_i^vee, alpha_j>` with Bourbaki numbering.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{is_natural, q, Q};
use crate::weight::{half_sum, GWeight, WeightMultiset, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A product of simple types, e.g. `A1xA1` or `B2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    components: Vec<(Family, usize)>,
}

impl LieType {
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidLieType("no simple components".into()));
        }
        for &(fam, rank) in &components {
            if !fam.admits_rank(rank) {
                return Err(Error::InvalidLieType(format!("{}{}", fam.letter(), rank)));
            }
        }
        Ok(LieType { components })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        LieType::new(vec![(family, rank)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// Number of positive roots from the classification.
    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|&(fam, n)| match fam {
                Family::A => n * (n + 1) / 2,
                Family::B | Family::C => n * n,
                Family::D => n * (n - 1),
                Family::E => match n {
                    6 => 36,
                    7 => 63,
                    _ => 120,
                },
                Family::F => 24,
                Family::G => 6,
            })
            .sum()
    }

    /// Block-diagonal Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for &(fam, r) in &self.components {
            let block = simple_cartan(fam, r);
            for i in 0..r {
                for j in 0..r {
                    a[offset + i][offset + j] = block[i][j];
                }
            }
            offset += r;
        }
        a
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(fam, r)| format!("{}{}", fam.letter(), r))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLieType(s.to_string());
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '*', '+']) {
            let part = part.trim();
            let mut chars = part.chars();
            let fam = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            components.push((fam, rank));
        }
        LieType::new(components)
    }
}

fn simple_cartan(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match fam {
        Family::A | Family::B | Family::C | Family::F => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match fam {
        // alpha_n short
        Family::B => a[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => a[n - 2][n - 1] = -2,
        // alpha_3 short, alpha_2 long
        Family::F => a[2][1] = -2,
        // alpha_1 short
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

const MAX_ROOT_CLOSURE: usize = 20_000;

/// Positive roots as simple-root coefficient vectors, ordered by height and then
/// lexicographically. Works for any finite-type Cartan matrix; errors if the
/// closure does not terminate within a generous bound (non-finite type).
pub fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &layer {
        seen.insert(r.clone());
    }
    while !layer.is_empty() {
        layer.sort();
        all.extend(layer.iter().cloned());
        if all.len() > MAX_ROOT_CLOSURE {
            return Err(Error::InvalidEmbedding(
                "Cartan matrix is not of finite type (root closure does not terminate)".into(),
            ));
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far the alpha_i-string extends downward from beta
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(all)
}

/// Symmetrizer `d` with `d_i A_ij = d_j A_ji`, scaled per connected component so
/// the longest simple root has `d = 1`, i.e. squared length 2.
fn long_root_symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<Q>> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(q(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                if cartan[j][i] == 0 {
                    return Err(Error::InvalidEmbedding(
                        "Cartan matrix is not symmetrizable".into(),
                    ));
                }
                let dj = d[i].clone().unwrap() * q(cartan[i][j]) / q(cartan[j][i]);
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidEmbedding(
                            "Cartan matrix is not symmetrizable".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let max = component
            .iter()
            .map(|&i| d[i].clone().unwrap())
            .max()
            .unwrap();
        for &i in &component {
            d[i] = Some(d[i].clone().unwrap() / &max);
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Limits on explicit Weyl group enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeylCap {
    pub max_rank: usize,
    pub max_order: usize,
}

impl Default for WeylCap {
    fn default() -> Self {
        WeylCap {
            max_rank: 6,
            max_order: 100_000,
        }
    }
}

/// A Weyl group element as a reduced word `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub length: usize,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement {
            word: Vec::new(),
            length: 0,
        }
    }

    /// Applies the element given a simple-reflection action; rightmost letter first.
    pub fn act<W>(&self, x: &W, reflect: impl Fn(&W, usize) -> W) -> W
    where
        W: Clone,
    {
        self.word
            .iter()
            .rev()
            .fold(x.clone(), |acc, &i| reflect(&acc, i))
    }
}

/// Enumerates the Weyl group of a finite-type Cartan matrix by breadth-first
/// search on the orbit of rho (in fundamental-weight coordinates, where rho is
/// all ones). BFS depth is the length, and the recorded words are reduced.
pub fn enumerate_weyl(cartan: &[Vec<i64>], cap: WeylCap) -> Result<Vec<WeylElement>> {
    let n = cartan.len();
    if n > cap.max_rank {
        return Err(Error::WeylCapExceeded(format!(
            "rank {n} exceeds the cap {}",
            cap.max_rank
        )));
    }
    let start = vec![1i64; n];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut elements = vec![WeylElement::identity()];
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((y, idx)) = queue.pop_front() {
        for i in 0..n {
            let yi = y[i];
            let image: Vec<i64> = (0..n).map(|j| y[j] - yi * cartan[j][i]).collect();
            if index.contains_key(&image) {
                continue;
            }
            if elements.len() >= cap.max_order {
                return Err(Error::WeylCapExceeded(format!(
                    "more than {} elements",
                    cap.max_order
                )));
            }
            let parent = &elements[idx];
            let mut word = Vec::with_capacity(parent.word.len() + 1);
            word.push(i);
            word.extend_from_slice(&parent.word);
            let el = WeylElement {
                length: parent.length + 1,
                word,
            };
            index.insert(image.clone(), elements.len());
            queue.push_back((image, elements.len()));
            elements.push(el);
        }
    }
    Ok(elements)
}

/// Weyl dimension formula over an arbitrary positive system inside h*:
/// `prod <lambda + rho_s, beta> / <rho_s, beta>`. An empty system gives 1.
pub fn weyl_dimension(
    form: &Matrix,
    positive_roots: &[GWeight],
    highest: &GWeight,
) -> Result<u128> {
    highest.check_dim(form.rows(), "highest weight")?;
    let pair = |x: &GWeight, y: &GWeight| form.bilinear(x.coords(), y.coords());
    for beta in positive_roots {
        let coroot = q(2) * pair(highest, beta) / pair(beta, beta);
        if !coroot.is_integer() {
            return Err(Error::NotIntegral {
                weight: highest.to_string(),
                detail: format!(
                    "pairs to {} with the coroot of {beta}",
                    crate::rational::fmt_q(&coroot)
                ),
            });
        }
        if coroot.is_negative() {
            return Err(Error::NotDominant {
                weight: highest.to_string(),
                detail: format!("negative on the coroot of {beta}"),
            });
        }
    }
    let multiset: WeightMultiset<GWeight> = positive_roots.iter().cloned().collect();
    let rho = half_sum(&multiset, form.rows())?;
    let shifted = highest + &rho;
    let mut dim = Q::from_integer(BigInt::from(1));
    for beta in positive_roots {
        dim *= pair(&shifted, beta) / pair(&rho, beta);
    }
    debug_assert!(dim.is_integer());
    dim.to_integer()
        .to_u128()
        .ok_or_else(|| Error::Overflow("Weyl dimension".into()))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<GWeight>,
    positive_roots: Vec<GWeight>,
    form: Matrix,
    rho_tilde: GWeight,
}

impl RootSystem {
    pub fn build(lie_type: &LieType) -> Result<Self> {
        let cartan = lie_type.cartan_matrix();
        let n = cartan.len();
        let d = long_root_symmetrizer(&cartan)?;
        let mut form = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                form[(i, j)] = &d[i] * q(cartan[i][j]);
            }
        }
        debug_assert!(form.is_symmetric());
        let positive_roots: Vec<GWeight> = positive_root_coefficients(&cartan)?
            .iter()
            .map(|c| GWeight::from_ints(c))
            .collect();
        let simple_roots = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                GWeight::from_ints(&e)
            })
            .collect();
        let rho_tilde = half_sum(&positive_roots.iter().cloned().collect(), n)?;
        Ok(RootSystem {
            lie_type: lie_type.clone(),
            cartan,
            simple_roots,
            positive_roots,
            form,
            rho_tilde,
        })
    }

    pub fn lie_type(&self) -> &LieType {
        &self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[GWeight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[GWeight] {
        &self.positive_roots
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<GWeight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    pub fn is_positive_root(&self, x: &GWeight) -> bool {
        self.positive_roots
            .binary_search_by(|r| height_order(r, x))
            .is_ok()
    }

    /// Gram matrix of the simple roots.
    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn rho_tilde(&self) -> &GWeight {
        &self.rho_tilde
    }

    pub fn pair(&self, x: &GWeight, y: &GWeight) -> Result<Q> {
        x.check_dim(self.rank(), "left argument")?;
        y.check_dim(self.rank(), "right argument")?;
        Ok(self.form.bilinear(x.coords(), y.coords()))
    }

    /// `<x, alpha_i^vee>`.
    pub fn coroot_pairing(&self, x: &GWeight, i: usize) -> Q {
        self.cartan[i]
            .iter()
            .zip(x.coords())
            .filter(|(a, _)| **a != 0)
            .fold(Q::zero(), |acc, (&a, c)| acc + q(a) * c)
    }

    pub fn reflect(&self, x: &GWeight, i: usize) -> GWeight {
        let c = self.coroot_pairing(x, i);
        let mut coords = x.coords().to_vec();
        coords[i] -= c;
        GWeight::new(coords)
    }

    pub fn apply(&self, w: &WeylElement, x: &GWeight) -> GWeight {
        w.act(x, |v, i| self.reflect(v, i))
    }

    /// Coordinates `<x, alpha_i^vee>` in the basis of fundamental weights.
    pub fn to_fundamental(&self, x: &GWeight) -> Vec<Q> {
        (0..self.rank())
            .map(|i| self.coroot_pairing(x, i))
            .collect()
    }

    /// Inverse of [`to_fundamental`](Self::to_fundamental), via the inverse Cartan matrix.
    pub fn from_fundamental(&self, y: &[Q]) -> Result<GWeight> {
        if y.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                what: "fundamental-weight coordinates".into(),
                expected: self.rank(),
                found: y.len(),
            });
        }
        let n = self.rank();
        let a = Matrix::from_rows(
            self.cartan
                .iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
            n,
        )?;
        let inv = a
            .inverse()
            .expect("Cartan matrix of finite type is invertible");
        Ok(GWeight::new(inv.apply(y)))
    }

    pub fn is_dominant(&self, x: &GWeight) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(x, i).is_negative())
    }

    pub fn is_dominant_integral(&self, x: &GWeight) -> bool {
        (0..self.rank()).all(|i| is_natural(&self.coroot_pairing(x, i)))
    }

    /// The unique weakly dominant element of the W-orbit of `x`, and the word
    /// `w` (as applied, leftmost last) with `w(x)` equal to it.
    pub fn dominant_representative(&self, x: &GWeight) -> (GWeight, WeylElement) {
        let mut cur = x.clone();
        let mut applied = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.coroot_pairing(&cur, i).is_negative()) {
            cur = self.reflect(&cur, i);
            applied.push(i);
        }
        applied.reverse();
        let length = applied.len();
        (
            cur,
            WeylElement {
                word: applied,
                length,
            },
        )
    }

    pub fn weyl_group(&self, cap: WeylCap) -> Result<Vec<WeylElement>> {
        enumerate_weyl(&self.cartan, cap)
    }

    pub fn weyl_dim(&self, highest: &GWeight) -> Result<u128> {
        weyl_dimension(&self.form, &self.positive_roots, highest)
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        let image = self.apply(w, &self.rho_tilde);
        self.positive_roots
            .iter()
            .filter(|beta| {
                self.form
                    .bilinear(image.coords(), beta.coords())
                    .is_negative()
            })
            .count()
    }
}

fn height_order(a: &GWeight, b: &GWeight) -> std::cmp::Ordering {
    let h = |x: &GWeight| x.coords().iter().fold(Q::zero(), |acc, c| acc + c);
    h(a).cmp(&h(b)).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn g(c: &[i64]) -> GWeight {
        GWeight::from_ints(c)
    }

    #[test]
    fn parses_lie_types() {
        assert_eq!("A2".parse::<LieType>().unwrap().rank(), 2);
        assert_eq!("A1xA1".parse::<LieType>().unwrap().rank(), 2);
        assert_eq!("B2".parse::<LieType>().unwrap().to_string(), "B2");
        for bad in [
            "B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0", "Z2", "", "A",
        ] {
            assert!(bad.parse::<LieType>().is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn a2_roots_and_rho() {
        let a2 = rs("A2");
        assert_eq!(a2.positive_roots(), &[g(&[0, 1]), g(&[1, 0]), g(&[1, 1])]);
        assert_eq!(a2.rho_tilde(), &g(&[1, 1]));
        assert_eq!(a2.pair(&g(&[1, 0]), &g(&[0, 1])).unwrap(), q(-1));
    }

    #[test]
    fn b2_roots_form_and_rho() {
        let b2 = rs("B2");
        let roots: HashSet<_> = b2.positive_roots().iter().cloned().collect();
        let expected: HashSet<_> = [g(&[1, 0]), g(&[0, 1]), g(&[1, 1]), g(&[1, 2])]
            .into_iter()
            .collect();
        assert_eq!(roots, expected);
        assert_eq!(b2.rho_tilde(), &GWeight::new(vec![frac(3, 2), q(2)]));
        assert_eq!(b2.pair(&g(&[0, 1]), &g(&[0, 1])).unwrap(), q(1));
        assert_eq!(b2.pair(&g(&[1, 2]), &g(&[1, 2])).unwrap(), q(2));
    }

    #[test]
    fn a1_normalization() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.pair(&g(&[1]), &g(&[1])).unwrap(), q(2));
    }

    #[test]
    fn g2_short_root_has_length_two_thirds() {
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.pair(&g(&[1, 0]), &g(&[1, 0])).unwrap(), frac(2, 3));
        assert_eq!(g2.pair(&g(&[3, 2]), &g(&[3, 2])).unwrap(), q(2));
    }

    #[test]
    fn positive_root_counts_match_classification() {
        for t in [
            "A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "A1xB2", "C4", "D5", "E7", "E8",
        ] {
            let lt: LieType = t.parse().unwrap();
            let r = RootSystem::build(&lt).unwrap();
            assert_eq!(r.positive_roots().len(), lt.positive_root_count(), "{t}");
            assert!(r.form().is_positive_definite(), "{t}");
        }
    }

    #[test]
    fn long_roots_have_square_length_two() {
        for t in ["B3", "C3", "F4", "G2", "A2xG2"] {
            let r = rs(t);
            let max = r
                .positive_roots()
                .iter()
                .map(|a| r.pair(a, a).unwrap())
                .max()
                .unwrap();
            assert_eq!(max, q(2), "{t}");
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            let r = rs(t);
            let total = r
                .positive_roots()
                .iter()
                .fold(GWeight::zero(r.rank()), |acc, b| &acc + b);
            assert_eq!(total, r.rho_tilde().scaled(&q(2)), "{t}");
        }
    }

    #[test]
    fn weyl_group_orders() {
        let cap = WeylCap::default();
        let a1 = rs("A1").weyl_group(cap).unwrap();
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.iter().map(|w| w.length).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(rs("A2").weyl_group(cap).unwrap().len(), 6);
        assert_eq!(rs("A3").weyl_group(cap).unwrap().len(), 24);
        let b2 = rs("B2").weyl_group(cap).unwrap();
        assert_eq!(b2.len(), 8);
        assert_eq!(b2.iter().map(|w| w.length).max(), Some(4));
        assert_eq!(rs("G2").weyl_group(cap).unwrap().len(), 12);
        assert_eq!(rs("B3").weyl_group(cap).unwrap().len(), 48);
    }

    #[test]
    fn weyl_cap_is_enforced() {
        let err = rs("E7").weyl_group(WeylCap::default()).unwrap_err();
        assert!(matches!(err, Error::WeylCapExceeded(_)));
        let err = rs("A3")
            .weyl_group(WeylCap {
                max_rank: 6,
                max_order: 10,
            })
            .unwrap_err();
        assert!(matches!(err, Error::WeylCapExceeded(_)));
    }

    #[test]
    fn lengths_equal_inversion_counts() {
        for t in ["A2", "B2", "G2", "A3", "C3"] {
            let r = rs(t);
            for w in r.weyl_group(WeylCap::default()).unwrap() {
                assert_eq!(r.inversion_count(&w), w.length, "{t} {:?}", w.word);
                assert_eq!(w.word.len(), w.length);
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = rs("A1");
        // fundamental weight of A1 is alpha/2
        assert_eq!(a1.weyl_dim(&GWeight::new(vec![frac(1, 2)])).unwrap(), 2);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dim(&g(&[1, 1])).unwrap(), 8);
        assert_eq!(a2.weyl_dim(&g(&[0, 0])).unwrap(), 1);
        let b2 = rs("B2");
        // vector representation of so(5): highest weight alpha1 + alpha2
        assert_eq!(b2.weyl_dim(&g(&[1, 1])).unwrap(), 5);
        // adjoint of so(5): highest root alpha1 + 2 alpha2
        assert_eq!(b2.weyl_dim(&g(&[1, 2])).unwrap(), 10);
        let g2 = rs("G2");
        assert_eq!(g2.weyl_dim(&g(&[2, 1])).unwrap(), 7);
        assert_eq!(g2.weyl_dim(&g(&[3, 2])).unwrap(), 14);
    }

    #[test]
    fn weyl_dim_of_empty_system_is_one() {
        let form = Matrix::identity(2);
        assert_eq!(
            weyl_dimension(&form, &[], &GWeight::new(vec![frac(7, 3), q(-5)])).unwrap(),
            1
        );
    }

    #[test]
    fn weyl_dim_rejects_bad_weights() {
        let a2 = rs("A2");
        assert!(matches!(
            a2.weyl_dim(&g(&[-1, 0])),
            Err(Error::NotDominant { .. }) | Err(Error::NotIntegral { .. })
        ));
        assert!(matches!(
            a2.weyl_dim(&GWeight::new(vec![frac(1, 2), q(0)])),
            Err(Error::NotIntegral { .. })
        ));
    }

    #[test]
    fn dominant_representative_of_antidominant() {
        let a2 = rs("A2");
        let x = g(&[-2, -3]);
        let (dom, w) = a2.dominant_representative(&x);
        assert!(a2.is_dominant(&dom));
        assert_eq!(a2.apply(&w, &x), dom);
        // longest element of A2 is -id composed with the diagram flip
        assert_eq!(dom, g(&[3, 2]));
    }

    #[test]
    fn fundamental_coordinates_round_trip() {
        let b2 = rs("B2");
        let x = GWeight::new(vec![frac(3, 2), q(2)]);
        let y = b2.to_fundamental(&x);
        assert_eq!(y, vec![q(1), q(1)]);
        assert_eq!(b2.from_fundamental(&y).unwrap(), x);
    }
}
