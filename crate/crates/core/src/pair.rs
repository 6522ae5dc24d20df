//! Reductive pairs (g, k): the restriction h* → t*, the orthogonal lift, the
//! induced form on t*, k's root data with coroot functionals, Δ_t and ρ.
//!
//! Only the case n_λ ∩ k = n_k is modelled for b_k-dominant λ: the k-positive
//! roots are taken to lie in the nilradical of every compatible parabolic built
//! from a b_k-dominant regular λ. (Read literally, "p_λ ∩ k = n_k" cannot hold
//! since p_λ contains t; the nilradical reading is the one used downstream.)

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{fmt_q, is_natural, q, Q};
use crate::rootsys::{
    enumerate_weyl, positive_root_coefficients, RootSystem, WeylCap, WeylElement,
};
use crate::weight::{half_sum, GWeight, TWeight, WeightMultiset, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EmbeddingKind {
    Sl2Characteristic {
        labels: Vec<i64>,
    },
    Cartan,
    /// Simple-root indices (0-based) spanning the Levi factor.
    Levi {
        simple_subset: Vec<usize>,
    },
    Explicit,
}

/// Root data of k expressed in t*: simple roots, coroots as linear functionals
/// on t* (coefficient rows), the Cartan matrix they define, and the positive roots.
#[derive(Clone, Debug)]
pub struct KRootData {
    simple_roots: Vec<TWeight>,
    coroots: Vec<TWeight>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<TWeight>,
}

impl KRootData {
    fn new(rank_t: usize, simple_roots: Vec<TWeight>, coroots: Vec<TWeight>) -> Result<Self> {
        if simple_roots.len() != coroots.len() {
            return Err(Error::InvalidEmbedding(format!(
                "{} k-simple roots but {} coroots",
                simple_roots.len(),
                coroots.len()
            )));
        }
        for w in simple_roots.iter().chain(&coroots) {
            w.check_dim(rank_t, "k root datum")?;
        }
        let n = simple_roots.len();
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = dot(&coroots[i], &simple_roots[j]);
                if !v.is_integer() {
                    return Err(Error::InvalidEmbedding(format!(
                        "coroot {i} pairs non-integrally ({}) with k-simple root {j}",
                        fmt_q(&v)
                    )));
                }
                cartan[i][j] = crate::rational::to_i64(&v).unwrap();
            }
            if cartan[i][i] != 2 {
                return Err(Error::InvalidEmbedding(format!(
                    "coroot {i} pairs to {} with its own root (expected 2)",
                    cartan[i][i]
                )));
            }
        }
        let sign_pattern_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                i == j || (cartan[i][j] <= 0 && (cartan[i][j] == 0) == (cartan[j][i] == 0))
            })
        });
        if !sign_pattern_ok {
            return Err(Error::InvalidEmbedding(
                "k-simple roots do not form a Cartan matrix".into(),
            ));
        }
        let positive_roots = positive_root_coefficients(&cartan)?
            .iter()
            .map(|c| {
                let mut acc = TWeight::zero(rank_t);
                for (coef, s) in c.iter().zip(&simple_roots) {
                    if *coef != 0 {
                        acc = &acc + &s.scaled(&q(*coef));
                    }
                }
                acc
            })
            .collect();
        Ok(KRootData {
            simple_roots,
            coroots,
            cartan,
            positive_roots,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[TWeight] {
        &self.simple_roots
    }

    pub fn coroots(&self) -> &[TWeight] {
        &self.coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[TWeight] {
        &self.positive_roots
    }

    pub fn coroot_pairing(&self, x: &TWeight, i: usize) -> Q {
        dot(&self.coroots[i], x)
    }

    pub fn reflect(&self, x: &TWeight, i: usize) -> TWeight {
        let c = self.coroot_pairing(x, i);
        x - &self.simple_roots[i].scaled(&c)
    }

    pub fn apply(&self, w: &WeylElement, x: &TWeight) -> TWeight {
        w.act(x, |v, i| self.reflect(v, i))
    }

    pub fn weyl_group(&self, cap: WeylCap) -> Result<Vec<WeylElement>> {
        enumerate_weyl(&self.cartan, cap)
    }

    /// The weakly b_k-dominant element of the W_k-orbit of `x`.
    pub fn dominant_representative(&self, x: &TWeight) -> TWeight {
        let mut cur = x.clone();
        while let Some(i) = (0..self.rank()).find(|&i| self.coroot_pairing(&cur, i).is_negative()) {
            cur = self.reflect(&cur, i);
        }
        cur
    }
}

fn dot(a: &TWeight, b: &TWeight) -> Q {
    a.coords()
        .iter()
        .zip(b.coords())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Debug)]
pub struct ReductivePair {
    g: RootSystem,
    rank_t: usize,
    restriction: Matrix,
    lift: Matrix,
    t_form: Matrix,
    k: KRootData,
    rho: TWeight,
    delta_t: Vec<TWeight>,
    kind: EmbeddingKind,
}

impl ReductivePair {
    fn assemble(
        g: &RootSystem,
        restriction: Matrix,
        k_simple: Vec<TWeight>,
        k_coroots: Vec<TWeight>,
        kind: EmbeddingKind,
    ) -> Result<Self> {
        let rank_g = g.rank();
        if restriction.cols() != rank_g {
            return Err(Error::DimensionMismatch {
                what: "restriction matrix columns".into(),
                expected: rank_g,
                found: restriction.cols(),
            });
        }
        let rank_t = restriction.rows();
        if rank_t == 0 || restriction.rank() < rank_t {
            return Err(Error::InvalidEmbedding(
                "restriction matrix must have full row rank".into(),
            ));
        }
        // ker(R) is G-orthogonal to the image of G^{-1} R^T, so
        // L = G^{-1} R^T (R G^{-1} R^T)^{-1} is the orthogonal section of R.
        let g_inv = g.form().inverse().expect("invariant form is nondegenerate");
        let r_t = restriction.transpose();
        let dual_t_form = restriction.mul(&g_inv).mul(&r_t);
        let t_form = dual_t_form
            .inverse()
            .ok_or_else(|| Error::InvalidEmbedding("induced form on t* is degenerate".into()))?;
        let lift = g_inv.mul(&r_t).mul(&t_form);
        debug_assert_eq!(restriction.mul(&lift), Matrix::identity(rank_t));

        let delta_t: Vec<TWeight> = g
            .roots()
            .iter()
            .map(|a| TWeight::new(restriction.apply(a.coords())))
            .filter(|w| !w.is_zero())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let k = KRootData::new(rank_t, k_simple, k_coroots)?;
        for sigma in k.positive_roots() {
            if delta_t.binary_search(sigma).is_err() {
                return Err(Error::InvalidEmbedding(format!(
                    "k-positive root {sigma} is not the restriction of any root of g"
                )));
            }
        }
        for (i, sigma) in k.simple_roots().iter().enumerate() {
            // the coroot of sigma must be 2<., sigma>/<sigma, sigma> for the induced form
            let norm = t_form.bilinear(sigma.coords(), sigma.coords());
            let expected = TWeight::new(t_form.apply(sigma.coords())).scaled(&(q(2) / norm));
            if expected != k.coroots()[i] {
                return Err(Error::InvalidEmbedding(format!(
                    "coroot {} of k-simple root {sigma} disagrees with the invariant form (expected {expected})",
                    k.coroots()[i]
                )));
            }
        }
        let rho = half_sum(&k.positive_roots().iter().cloned().collect(), rank_t)?;
        Ok(ReductivePair {
            g: g.clone(),
            rank_t,
            restriction,
            lift,
            t_form,
            k,
            rho,
            delta_t,
            kind,
        })
    }

    /// The sl2-subalgebra with Dynkin characteristic `labels` (α_i(h) for each
    /// simple root). t* is identified with Q via μ ↦ μ(h); k's positive root is 2
    /// and ρ = 1.
    ///
    /// Besides the label range, the characteristic must be consistent with an
    /// actual sl2-subalgebra: the h-eigenvalues on g have to decompose into
    /// sl2-strings, with k itself among them, and strings of odd highest weight
    /// must come in pairs (they carry symplectic forms, g an orthogonal one).
    pub fn sl2(g: &RootSystem, labels: &[i64]) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidCharacteristic {
            labels: labels.to_vec(),
            reason: reason.to_string(),
        };
        if labels.len() != g.rank() {
            return Err(invalid(&format!("expected {} labels", g.rank())));
        }
        if labels.iter().any(|l| !(0..=2).contains(l)) {
            return Err(invalid("labels must lie in {0, 1, 2}"));
        }
        if labels.iter().all(|&l| l == 0) {
            return Err(invalid("all labels are zero"));
        }
        let mut eigen: BTreeMap<i64, i64> = BTreeMap::new();
        *eigen.entry(0).or_default() += g.rank() as i64;
        for root in g.roots() {
            let v: i64 = root
                .coords()
                .iter()
                .zip(labels)
                .map(|(c, l)| crate::rational::to_i64(c).unwrap() * l)
                .sum();
            *eigen.entry(v).or_default() += 1;
        }
        let top = *eigen.keys().next_back().unwrap();
        let count = |j: i64| eigen.get(&j).copied().unwrap_or(0);
        for j in 0..=top {
            let strings = count(j) - count(j + 2);
            if strings < 0 {
                return Err(invalid(&format!(
                    "h-eigenvalue {} occurs more often than {j}; not an sl2-character",
                    j + 2
                )));
            }
            if j % 2 == 1 && strings % 2 == 1 {
                return Err(invalid(&format!(
                    "odd number ({strings}) of sl2-strings with highest weight {j}"
                )));
            }
            if j == 2 && strings == 0 {
                return Err(invalid("no sl2-string of highest weight 2 to contain k"));
            }
        }
        let row: Vec<Q> = labels.iter().map(|&l| q(l)).collect();
        let restriction = Matrix::from_rows(vec![row], g.rank())?;
        Self::assemble(
            g,
            restriction,
            vec![TWeight::from_ints(&[2])],
            vec![TWeight::from_ints(&[1])],
            EmbeddingKind::Sl2Characteristic {
                labels: labels.to_vec(),
            },
        )
    }

    /// k = h. Restriction is the identity and k has no roots.
    pub fn cartan(g: &RootSystem) -> Result<Self> {
        Self::assemble(
            g,
            Matrix::identity(g.rank()),
            vec![],
            vec![],
            EmbeddingKind::Cartan,
        )
    }

    /// The standard Levi subalgebra on the given simple roots (0-based indices).
    pub fn levi(g: &RootSystem, simple_subset: &[usize]) -> Result<Self> {
        let n = g.rank();
        let subset: BTreeSet<usize> = simple_subset.iter().copied().collect();
        if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidEmbedding(format!(
                "simple-root index {bad} out of range for rank {n}"
            )));
        }
        let simple = subset
            .iter()
            .map(|&i| TWeight::new(g.simple_roots()[i].coords().to_vec()))
            .collect();
        let coroots = subset
            .iter()
            .map(|&i| TWeight::from_ints(&g.cartan()[i]))
            .collect();
        Self::assemble(
            g,
            Matrix::identity(n),
            simple,
            coroots,
            EmbeddingKind::Levi {
                simple_subset: subset.into_iter().collect(),
            },
        )
    }

    /// Arbitrary embedding data: a restriction matrix (rank t × rank g), the
    /// k-simple roots in t*, and their coroots as functionals on t*.
    pub fn explicit(
        g: &RootSystem,
        restriction: Matrix,
        k_simple_roots: Vec<TWeight>,
        k_coroots: Vec<TWeight>,
    ) -> Result<Self> {
        Self::assemble(
            g,
            restriction,
            k_simple_roots,
            k_coroots,
            EmbeddingKind::Explicit,
        )
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn rank_t(&self) -> usize {
        self.rank_t
    }

    pub fn restriction(&self) -> &Matrix {
        &self.restriction
    }

    pub fn lift_matrix(&self) -> &Matrix {
        &self.lift
    }

    /// Gram matrix of the induced form on t*.
    pub fn t_form(&self) -> &Matrix {
        &self.t_form
    }

    pub fn k(&self) -> &KRootData {
        &self.k
    }

    pub fn k_positive_roots(&self) -> &[TWeight] {
        self.k.positive_roots()
    }

    pub fn rho(&self) -> &TWeight {
        &self.rho
    }

    pub fn delta_t(&self) -> &[TWeight] {
        &self.delta_t
    }

    pub fn kind(&self) -> &EmbeddingKind {
        &self.kind
    }

    pub fn sl2_labels(&self) -> Option<&[i64]> {
        match &self.kind {
            EmbeddingKind::Sl2Characteristic { labels } => Some(labels),
            _ => None,
        }
    }

    pub fn restrict(&self, x: &GWeight) -> Result<TWeight> {
        x.check_dim(self.g.rank(), "g-weight")?;
        Ok(TWeight::new(self.restriction.apply(x.coords())))
    }

    pub fn lift(&self, y: &TWeight) -> Result<GWeight> {
        y.check_dim(self.rank_t, "t-weight")?;
        Ok(GWeight::new(self.lift.apply(y.coords())))
    }

    pub fn t_pair(&self, x: &TWeight, y: &TWeight) -> Result<Q> {
        x.check_dim(self.rank_t, "left argument")?;
        y.check_dim(self.rank_t, "right argument")?;
        Ok(self.t_form.bilinear(x.coords(), y.coords()))
    }

    /// ch_t g restricted to nonzero weights of positive g-roots, as a multiset.
    pub fn restricted_positive_roots(&self) -> WeightMultiset<TWeight> {
        self.g
            .positive_roots()
            .iter()
            .map(|a| TWeight::new(self.restriction.apply(a.coords())))
            .collect()
    }

    /// Checks that μ is k-integral and b_k-dominant via the coroot functionals.
    pub fn check_dominant_integral(&self, mu: &TWeight) -> Result<()> {
        mu.check_dim(self.rank_t, "k-type highest weight")?;
        for i in 0..self.k.rank() {
            let c = self.k.coroot_pairing(mu, i);
            if !c.is_integer() {
                return Err(Error::NotIntegral {
                    weight: mu.to_string(),
                    detail: format!("coroot {i} gives {}", fmt_q(&c)),
                });
            }
            if !is_natural(&c) {
                return Err(Error::NotDominant {
                    weight: mu.to_string(),
                    detail: format!("coroot {i} gives {}", fmt_q(&c)),
                });
            }
        }
        Ok(())
    }

    pub fn is_dominant_integral(&self, mu: &TWeight) -> bool {
        self.check_dominant_integral(mu).is_ok()
    }
}
