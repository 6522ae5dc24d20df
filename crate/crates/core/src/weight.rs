//! Weight vectors with exact coordinates, and finite multisets of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{fmt_coords, fmt_q, q, Q};

/// Common surface of [`GWeight`] and [`TWeight`].
pub trait WeightVector: Clone + Ord + fmt::Debug {
    fn from_coords(coords: Vec<Q>) -> Self;
    fn coords(&self) -> &[Q];

    fn dim(&self) -> usize {
        self.coords().len()
    }

    fn zero(dim: usize) -> Self {
        Self::from_coords(vec![Q::zero(); dim])
    }

    fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }

    fn scaled(&self, c: &Q) -> Self {
        Self::from_coords(self.coords().iter().map(|x| x * c).collect())
    }

    fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_coords(
            self.coords()
                .iter()
                .zip(other.coords())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_coords(
            self.coords()
                .iter()
                .zip(other.coords())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    fn check_dim(&self, expected: usize, what: &str) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                what: what.to_string(),
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

macro_rules! weight_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Vec<Q>);

        impl $name {
            pub fn new(coords: Vec<Q>) -> Self {
                $name(coords)
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                $name(coords.iter().map(|&x| q(x)).collect())
            }

            pub fn into_coords(self) -> Vec<Q> {
                self.0
            }
        }

        impl WeightVector for $name {
            fn from_coords(coords: Vec<Q>) -> Self {
                $name(coords)
            }
            fn coords(&self) -> &[Q] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.len() == 1 {
                    write!(f, "{}", fmt_q(&self.0[0]))
                } else {
                    write!(f, "{}", fmt_coords(&self.0))
                }
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(fmt_q))
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                self.plus(rhs)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                self.minus(rhs)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|x| -x).collect())
            }
        }
    };
}

weight_type!(
    /// An element of h*, in the basis of simple roots of g.
    GWeight
);
weight_type!(
    /// An element of t*, in the coordinates fixed by the pair's restriction map.
    TWeight
);

/// A finite multiset: weight ↦ positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset<W: WeightVector> {
    entries: BTreeMap<W, usize>,
}

impl<W: WeightVector> Default for WeightMultiset<W> {
    fn default() -> Self {
        WeightMultiset {
            entries: BTreeMap::new(),
        }
    }
}

impl<W: WeightVector> WeightMultiset<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: W, mult: usize) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &W) -> usize {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn size(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &W> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&W, usize)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.iter().all(|(w, m)| other.multiplicity(w) >= m)
    }

    /// `self − other`; `Err(w)` names the first weight where `other` exceeds `self`.
    pub fn difference(&self, other: &Self) -> std::result::Result<Self, W> {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            let have = out.multiplicity(w);
            if have < m {
                return Err(w.clone());
            }
            if have == m {
                out.entries.remove(w);
            } else {
                out.entries.insert(w.clone(), have - m);
            }
        }
        Ok(out)
    }

    /// Expands into a list with each weight repeated by its multiplicity.
    pub fn to_list(&self) -> Vec<W> {
        self.iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), m))
            .collect()
    }
}

impl<W: WeightVector> FromIterator<W> for WeightMultiset<W> {
    fn from_iter<I: IntoIterator<Item = W>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for w in iter {
            m.insert(w, 1);
        }
        m
    }
}

impl<W: WeightVector + Serialize> Serialize for WeightMultiset<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a, W> {
            weight: &'a W,
            multiplicity: usize,
        }
        s.collect_seq(self.iter().map(|(weight, multiplicity)| Entry {
            weight,
            multiplicity,
        }))
    }
}

impl<W: WeightVector + fmt::Display> fmt::Display for WeightMultiset<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(w, m)| format!("{w}↦{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// ½·Σ multiplicity·weight. The empty multiset gives the zero weight of dimension `dim`.
pub fn half_sum<W: WeightVector>(m: &WeightMultiset<W>, dim: usize) -> Result<W> {
    let mut acc = vec![Q::zero(); dim];
    for (w, mult) in m.iter() {
        w.check_dim(dim, "multiset entry")?;
        let k = q(mult as i64);
        for (a, x) in acc.iter_mut().zip(w.coords()) {
            *a += x * &k;
        }
    }
    let half = Q::new(1.into(), 2.into());
    Ok(W::from_coords(acc).scaled(&half))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(x: i64) -> TWeight {
        TWeight::from_ints(&[x])
    }

    #[test]
    fn half_sum_of_empty_is_zero() {
        let m: WeightMultiset<TWeight> = WeightMultiset::new();
        assert_eq!(half_sum(&m, 1).unwrap(), t(0));
        assert_eq!(half_sum(&m, 3).unwrap(), TWeight::zero(3));
    }

    #[test]
    fn half_sum_counts_multiplicity() {
        let m: WeightMultiset<TWeight> = [t(2), t(4)].into_iter().collect();
        assert_eq!(half_sum(&m, 1).unwrap(), t(3));
        let mut b = WeightMultiset::new();
        b.insert(t(2), 2);
        b.insert(t(4), 1);
        b.insert(t(6), 1);
        assert_eq!(half_sum(&b, 1).unwrap(), t(7));
    }

    #[test]
    fn half_sum_rejects_wrong_dimension() {
        let m: WeightMultiset<TWeight> = [t(2)].into_iter().collect();
        assert!(half_sum(&m, 2).is_err());
    }

    #[test]
    fn difference_and_submultiset() {
        let mut a = WeightMultiset::new();
        a.insert(t(2), 2);
        a.insert(t(4), 1);
        let b: WeightMultiset<TWeight> = [t(2)].into_iter().collect();
        assert!(b.is_submultiset_of(&a));
        let d = a.difference(&b).unwrap();
        assert_eq!(d.multiplicity(&t(2)), 1);
        assert_eq!(d.size(), 2);
        let c: WeightMultiset<TWeight> = [t(6)].into_iter().collect();
        assert_eq!(a.difference(&c), Err(t(6)));
        assert_eq!(a.to_list(), vec![t(2), t(2), t(4)]);
    }

    #[test]
    fn insert_zero_multiplicity_is_noop() {
        let mut a = WeightMultiset::new();
        a.insert(t(1), 0);
        assert!(a.is_empty());
    }
}
