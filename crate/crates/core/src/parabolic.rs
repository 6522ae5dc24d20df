//! Compatible parabolic subalgebras p_λ = m ⊕ n and their t-characters.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pair::ReductivePair;
use crate::weight::{half_sum, GWeight, TWeight, WeightMultiset, WeightVector};

/// The decomposition of g attached to λ ∈ t*.
///
/// `n_roots` are the g-roots pairing strictly positively with λ after
/// restriction, `m_roots` those pairing to zero (both signs). n ∩ k is the
/// k-positive-root multiset and n ∩ k⊥ its complement in ch_t n.
#[derive(Clone, Debug, Serialize)]
pub struct CompatibleParabolic {
    pub lambda: TWeight,
    pub n_roots: Vec<GWeight>,
    pub m_roots: Vec<GWeight>,
    pub ch_t_n: WeightMultiset<TWeight>,
    pub ch_t_n_cap_k: WeightMultiset<TWeight>,
    pub ch_t_n_cap_kperp: WeightMultiset<TWeight>,
    pub rho_n: TWeight,
    pub rho_n_perp: TWeight,
    pub s: usize,
    pub r: usize,
    pub minimal: bool,
}

impl CompatibleParabolic {
    /// Positive roots of m with respect to the standard positive system of g.
    pub fn m_positive_roots(&self, pair: &ReductivePair) -> Vec<GWeight> {
        self.m_roots
            .iter()
            .filter(|a| pair.g().is_positive_root(a))
            .cloned()
            .collect()
    }

    /// Positive system of the Borel b ⊂ p used for highest weights: n together
    /// with the standard positive roots of m (λ's chamber refined by ρ̃).
    pub fn borel_positive_roots(&self, pair: &ReductivePair) -> Vec<GWeight> {
        let mut roots = self.n_roots.clone();
        roots.extend(self.m_positive_roots(pair));
        roots.sort();
        roots
    }
}

/// A σ ∈ Δ_t with ⟨λ, σ⟩ = 0, if any.
pub fn singular_root(pair: &ReductivePair, lambda: &TWeight) -> Result<Option<TWeight>> {
    lambda.check_dim(pair.rank_t(), "lambda")?;
    for sigma in pair.delta_t() {
        if pair.t_pair(lambda, sigma)?.is_zero() {
            return Ok(Some(sigma.clone()));
        }
    }
    Ok(None)
}

pub fn is_regular(pair: &ReductivePair, lambda: &TWeight) -> Result<bool> {
    Ok(singular_root(pair, lambda)?.is_none())
}

pub fn compatible_parabolic(pair: &ReductivePair, lambda: &TWeight) -> Result<CompatibleParabolic> {
    lambda.check_dim(pair.rank_t(), "lambda")?;
    let mut n_roots = Vec::new();
    let mut m_roots = Vec::new();
    let mut ch_t_n = WeightMultiset::new();
    let mut minimal = true;
    for alpha in pair.g().roots() {
        let restricted = pair.restrict(&alpha)?;
        let value = pair.t_pair(lambda, &restricted)?;
        if value.is_positive() {
            ch_t_n.insert(restricted, 1);
            n_roots.push(alpha);
        } else if value.is_zero() {
            if !restricted.is_zero() {
                minimal = false;
            }
            m_roots.push(alpha);
        }
    }
    n_roots.sort();
    m_roots.sort();

    let ch_t_n_cap_k: WeightMultiset<TWeight> = pair.k_positive_roots().iter().cloned().collect();
    let ch_t_n_cap_kperp = ch_t_n
        .difference(&ch_t_n_cap_k)
        .map_err(|w| Error::NotSubmultiset {
            weight: w.to_string(),
        })?;
    let rank_t = pair.rank_t();
    let rho_n = half_sum(&ch_t_n, rank_t)?;
    let rho_n_perp = half_sum(&ch_t_n_cap_kperp, rank_t)?;
    Ok(CompatibleParabolic {
        lambda: lambda.clone(),
        n_roots,
        m_roots,
        s: ch_t_n_cap_k.size(),
        r: ch_t_n_cap_kperp.size(),
        ch_t_n,
        ch_t_n_cap_k,
        ch_t_n_cap_kperp,
        rho_n,
        rho_n_perp,
        minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};
    use crate::rootsys::RootSystem;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn t(c: &[i64]) -> TWeight {
        TWeight::from_ints(c)
    }

    fn ms(entries: &[(i64, usize)]) -> WeightMultiset<TWeight> {
        let mut m = WeightMultiset::new();
        for &(w, k) in entries {
            m.insert(t(&[w]), k);
        }
        m
    }

    #[test]
    fn regularity() {
        let p = ReductivePair::sl2(&rs("A2"), &[2, 2]).unwrap();
        assert!(is_regular(&p, &t(&[5])).unwrap());
        assert!(!is_regular(&p, &t(&[0])).unwrap());
        let a2 = rs("A2");
        let c = ReductivePair::cartan(&a2).unwrap();
        let rho = c.restrict(a2.rho_tilde()).unwrap();
        assert!(is_regular(&c, &rho).unwrap());
        assert!(is_regular(&c, &t(&[1, 0])).unwrap());
        // (1, 2) is orthogonal to alpha_1
        assert!(!is_regular(&c, &t(&[1, 2])).unwrap());
    }

    #[test]
    fn a2_principal_m3() {
        let p = ReductivePair::sl2(&rs("A2"), &[2, 2]).unwrap();
        let par = compatible_parabolic(&p, &t(&[5])).unwrap();
        assert_eq!(par.ch_t_n, ms(&[(2, 2), (4, 1)]));
        assert_eq!(par.ch_t_n_cap_k, ms(&[(2, 1)]));
        assert_eq!(par.ch_t_n_cap_kperp, ms(&[(2, 1), (4, 1)]));
        assert_eq!(par.rho_n, t(&[4]));
        assert_eq!(par.rho_n_perp, t(&[3]));
        assert_eq!((par.s, par.r), (1, 2));
        assert!(par.minimal);
        assert_eq!(par.rho_n, p.rho() + &par.rho_n_perp);
    }

    #[test]
    fn b2_principal() {
        let p = ReductivePair::sl2(&rs("B2"), &[2, 2]).unwrap();
        let par = compatible_parabolic(&p, &t(&[8])).unwrap();
        assert_eq!(par.ch_t_n, ms(&[(2, 2), (4, 1), (6, 1)]));
        assert_eq!(par.rho_n, t(&[7]));
        assert_eq!(par.rho_n_perp, t(&[6]));
        assert_eq!((par.s, par.r), (1, 3));
    }

    #[test]
    fn cartan_a1() {
        let p = ReductivePair::cartan(&rs("A1")).unwrap();
        let par = compatible_parabolic(&p, &t(&[1])).unwrap();
        assert_eq!(par.n_roots, vec![GWeight::from_ints(&[1])]);
        assert_eq!((par.s, par.r), (0, 1));
        assert_eq!(par.rho_n, TWeight::new(vec![frac(1, 2)]));
        assert_eq!(par.rho_n_perp, par.rho_n);
    }

    #[test]
    fn irregular_lambda_is_not_minimal() {
        let a2 = rs("A2");
        let p = ReductivePair::cartan(&a2).unwrap();
        // alpha_1 - alpha_2 is orthogonal to alpha_1 + alpha_2
        let lambda = t(&[1, -1]);
        assert!(!is_regular(&p, &lambda).unwrap());
        let par = compatible_parabolic(&p, &lambda).unwrap();
        assert!(!par.minimal);
        assert_eq!(par.m_roots.len(), 2);
        assert_eq!(par.n_roots.len(), 2);
    }

    #[test]
    fn non_dominant_lambda_is_rejected() {
        let p = ReductivePair::sl2(&rs("A2"), &[2, 2]).unwrap();
        assert!(matches!(
            compatible_parabolic(&p, &t(&[-3])),
            Err(Error::NotSubmultiset { .. })
        ));
    }

    #[test]
    fn levi_m_and_borel() {
        let b2 = rs("B2");
        let p = ReductivePair::levi(&b2, &[0]).unwrap();
        // lambda regular dominant for g
        let lambda = p.restrict(b2.rho_tilde()).unwrap();
        let par = compatible_parabolic(&p, &lambda).unwrap();
        assert!(par.minimal);
        assert!(par.m_roots.is_empty());
        assert_eq!(par.borel_positive_roots(&p).len(), 4);
        assert_eq!((par.s, par.r), (1, 3));
        // alpha_1 is orthogonal to alpha_1 + 2 alpha_2
        let par = compatible_parabolic(&p, &t(&[1, 0])).unwrap();
        assert!(!par.minimal);
        assert_eq!(
            par.m_roots,
            vec![GWeight::from_ints(&[-1, -2]), GWeight::from_ints(&[1, 2])]
        );
        assert_eq!(par.m_positive_roots(&p), vec![GWeight::from_ints(&[1, 2])]);
    }

    fn matrix_pairs() -> Vec<ReductivePair> {
        vec![
            ReductivePair::sl2(&rs("A2"), &[2, 2]).unwrap(),
            ReductivePair::sl2(&rs("B2"), &[2, 2]).unwrap(),
            ReductivePair::cartan(&rs("A2")).unwrap(),
            ReductivePair::levi(&rs("B2"), &[1]).unwrap(),
            ReductivePair::levi(&rs("A3"), &[0, 2]).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn scaling_lambda_keeps_decomposition(
            which in 0usize..5,
            coords in prop::collection::vec(-6i64..=6, 3),
            num in 1i64..9,
            den in 1i64..9,
        ) {
            let pairs = matrix_pairs();
            let p = &pairs[which];
            let lambda = TWeight::from_ints(&coords[..p.rank_t()]);
            let c = frac(num, den);
            let a = compatible_parabolic(p, &lambda);
            let b = compatible_parabolic(p, &lambda.scaled(&c));
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a.n_roots, b.n_roots);
                    prop_assert_eq!(a.m_roots, b.m_roots);
                    prop_assert_eq!(a.minimal, b.minimal);
                }
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "scaling changed success"),
            }
        }

        #[test]
        fn roots_are_partitioned(
            which in 0usize..5,
            coords in prop::collection::vec(-6i64..=6, 3),
        ) {
            let pairs = matrix_pairs();
            let p = &pairs[which];
            let lambda = TWeight::from_ints(&coords[..p.rank_t()]);
            if let Ok(par) = compatible_parabolic(p, &lambda) {
                let neg: Vec<GWeight> = par.n_roots.iter().map(|a| -a).collect();
                for a in p.g().roots() {
                    let places = [par.n_roots.contains(&a), par.m_roots.contains(&a), neg.contains(&a)];
                    prop_assert_eq!(places.iter().filter(|&&x| x).count(), 1);
                }
                for (beta, _) in par.ch_t_n.iter() {
                    prop_assert!(p.t_pair(&lambda, beta).unwrap() > q(0));
                }
                prop_assert_eq!(par.s + par.r, par.ch_t_n.size());
            }
        }
    }
}
