//! Genericity of k-types, with λ = μ + 2ρ:
//!
//! 1. ⟨λ − ρ_n, α⟩ ≥ 0 for every α in the support of ch_t(n ∩ k);
//! 2. ⟨λ − ρ_S, ρ_S⟩ > 0 for every nonempty submultiset S of ch_t n.
//!
//! The second check skips the empty S, whose pairing is exactly zero and
//! would make the condition unsatisfiable. Also here: the rank-one closed form.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pair::ReductivePair;
use crate::parabolic::{compatible_parabolic, singular_root, CompatibleParabolic};
use crate::rational::{fmt_q, q, serialize_q, Q};
use crate::weight::{half_sum, TWeight, WeightMultiset, WeightVector};

/// Highest weight of an irreducible k-module V(μ); b_k-dominant and k-integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct KType {
    mu: TWeight,
}

impl KType {
    pub fn new(pair: &ReductivePair, mu: TWeight) -> Result<Self> {
        pair.check_dominant_integral(&mu)?;
        Ok(KType { mu })
    }

    pub fn mu(&self) -> &TWeight {
        &self.mu
    }
}

/// ‖μ + 2ρ‖², the quantity minimized by the minimal k-type.
pub fn norm2_shifted(pair: &ReductivePair, mu: &TWeight) -> Result<Q> {
    let shifted = mu + &pair.rho().scaled(&q(2));
    pair.t_pair(&shifted, &shifted)
}

/// The candidate of least shifted norm; ties go to the lexicographically smallest.
pub fn minimal_ktype(pair: &ReductivePair, candidates: &[TWeight]) -> Result<TWeight> {
    let mut best: Option<(Q, &TWeight)> = None;
    for c in candidates {
        pair.check_dominant_integral(c)?;
        let n = norm2_shifted(pair, c)?;
        let better = match &best {
            None => true,
            Some((bn, bw)) => n < *bn || (n == *bn && c < *bw),
        };
        if better {
            best = Some((n, c));
        }
    }
    best.map(|(_, w)| w.clone()).ok_or(Error::EmptyCandidates)
}

/// A nonempty S ⊆ ch_t n with ⟨λ − ρ_S, ρ_S⟩ ≤ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmultisetWitness {
    pub subset: WeightMultiset<TWeight>,
    pub rho_s: TWeight,
    #[serde(serialize_with = "serialize_q")]
    pub value: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericityReport {
    pub mu: TWeight,
    pub lambda: TWeight,
    pub holds: bool,
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    /// A k-positive root α with ⟨λ − ρ_n, α⟩ < 0.
    pub condition1_witness: Option<TWeight>,
    /// A failing submultiset of least size (the first such in search order).
    pub condition2_witness: Option<SubmultisetWitness>,
}

/// Decides whether V(μ) is generic, with λ = μ + 2ρ.
pub fn is_generic(pair: &ReductivePair, mu: &TWeight) -> Result<GenericityReport> {
    pair.check_dominant_integral(mu)?;
    let lambda = mu + &pair.rho().scaled(&q(2));
    if let Some(root) = singular_root(pair, &lambda)? {
        return Err(Error::Irregular {
            lambda: lambda.to_string(),
            root: root.to_string(),
        });
    }
    let par = compatible_parabolic(pair, &lambda)?;
    let condition1_witness = condition1_failure(pair, &par)?;
    let condition2_witness = condition2_failure(pair.t_form(), &lambda, &par.ch_t_n);
    let condition1_ok = condition1_witness.is_none();
    let condition2_ok = condition2_witness.is_none();
    Ok(GenericityReport {
        mu: mu.clone(),
        lambda,
        holds: condition1_ok && condition2_ok,
        condition1_ok,
        condition2_ok,
        condition1_witness,
        condition2_witness,
    })
}

fn condition1_failure(pair: &ReductivePair, par: &CompatibleParabolic) -> Result<Option<TWeight>> {
    let shifted = &par.lambda - &par.rho_n;
    for alpha in par.ch_t_n_cap_k.support() {
        if pair.t_pair(&shifted, alpha)?.is_negative() {
            return Ok(Some(alpha.clone()));
        }
    }
    Ok(None)
}

/// Branch-and-bound search for a nonempty S ⊆ `multiset` with
/// f(S) = ⟨c − ρ_S, ρ_S⟩ ≤ 0, returning one of least size.
///
/// Writing ρ_S = (P + Q)/2 with P the part fixed so far and Q = Σ n_β β the
/// completion, f = f(P) + ½⟨c − P, Q⟩ − ¼|Q|². The linear term is bounded
/// below weight by weight and |Q|² above by dropping negative cross terms, so
/// a subtree is skipped once that bound is positive.
pub(crate) fn condition2_failure(
    form: &Matrix,
    c: &TWeight,
    multiset: &WeightMultiset<TWeight>,
) -> Option<SubmultisetWitness> {
    let ip = |x: &TWeight, y: &TWeight| form.bilinear(x.coords(), y.coords());
    let mut items: Vec<(TWeight, usize, Q)> = multiset
        .iter()
        .map(|(b, m)| (b.clone(), m, ip(c, b)))
        .collect();
    items.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(&b.0)));

    let k = items.len();
    let gram: Vec<Vec<Q>> = items
        .iter()
        .map(|(a, _, _)| items.iter().map(|(b, _, _)| ip(a, b)).collect())
        .collect();
    // tail_quad[i] = Σ_{j,l ≥ i} m_j m_l max(0, ⟨β_j, β_l⟩)
    let mut tail_quad = vec![Q::zero(); k + 1];
    for i in (0..k).rev() {
        let mut extra = Q::zero();
        for j in i..k {
            let g = &gram[i][j];
            if g.is_positive() {
                let w = q((items[i].1 * items[j].1) as i64) * g;
                extra += if i == j { w } else { w * q(2) };
            }
        }
        tail_quad[i] = &tail_quad[i + 1] + extra;
    }

    let mut search = Search {
        items: &items,
        gram: &gram,
        tail_quad: &tail_quad,
        counts: vec![0; k],
        best: None,
    };
    let state = Partial {
        c_dot: Q::zero(),
        norm: Q::zero(),
        dots: vec![Q::zero(); k],
        size: 0,
    };
    search.descend(0, &state);

    let (counts, _) = search.best?;
    let mut subset = WeightMultiset::new();
    for (i, &n) in counts.iter().enumerate() {
        subset.insert(items[i].0.clone(), n);
    }
    let rho_s = half_sum(&subset, c.dim()).expect("subset weights share the dimension of c");
    let value = ip(&(c - &rho_s), &rho_s);
    Some(SubmultisetWitness {
        subset,
        rho_s,
        value,
    })
}

/// Pairings of the partial sum P: ⟨c, P⟩, |P|², ⟨P, β_j⟩ for every j.
struct Partial {
    c_dot: Q,
    norm: Q,
    dots: Vec<Q>,
    size: usize,
}

impl Partial {
    /// f(P) scaled by 4: 2⟨c, P⟩ − |P|².
    fn value4(&self) -> Q {
        &self.c_dot * q(2) - &self.norm
    }

    fn add(&self, i: usize, n: usize, c_dot_i: &Q, gram: &[Vec<Q>]) -> Partial {
        let nq = q(n as i64);
        let k = self.dots.len();
        let norm = &self.norm + &self.dots[i] * &nq * q(2) + &gram[i][i] * &nq * &nq;
        let dots = (0..k).map(|j| &self.dots[j] + &gram[i][j] * &nq).collect();
        Partial {
            c_dot: &self.c_dot + c_dot_i * &nq,
            norm,
            dots,
            size: self.size + n,
        }
    }
}

struct Search<'a> {
    items: &'a [(TWeight, usize, Q)],
    gram: &'a [Vec<Q>],
    tail_quad: &'a [Q],
    counts: Vec<usize>,
    best: Option<(Vec<usize>, usize)>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize, p: &Partial) {
        if let Some((_, best_size)) = &self.best {
            if p.size >= *best_size {
                return;
            }
        }
        if p.size > 0 && !p.value4().is_positive() {
            self.best = Some((self.counts.clone(), p.size));
            return;
        }
        if i == self.items.len() || (p.size > 0 && self.lower_bound4(i, p).is_positive()) {
            return;
        }
        let (_, mult, c_dot_i) = &self.items[i];
        for n in 0..=*mult {
            self.counts[i] = n;
            let next = if n == 0 {
                None
            } else {
                Some(p.add(i, n, c_dot_i, self.gram))
            };
            self.descend(i + 1, next.as_ref().unwrap_or(p));
        }
        self.counts[i] = 0;
    }

    /// 4 × a lower bound for f over all completions using items i.. .
    fn lower_bound4(&self, i: usize, p: &Partial) -> Q {
        let mut linear = Q::zero();
        for j in i..self.items.len() {
            let (_, mult, c_dot_j) = &self.items[j];
            // 4 · ½⟨c − P, β_j⟩ per copy
            let a = (c_dot_j - &p.dots[j]) * q(2);
            if a.is_negative() {
                linear += a * q(*mult as i64);
            }
        }
        p.value4() + linear - &self.tail_quad[i]
    }
}

/// ρ̃(h) for an sl2 pair; V(m) is generic exactly when m + 1 ≥ this value.
pub fn sl2_threshold(pair: &ReductivePair) -> Result<u64> {
    let is_sl2 = pair.rank_t() == 1 && pair.k_positive_roots() == [TWeight::from_ints(&[2])];
    if !is_sl2 {
        return Err(Error::NotSl2Pair {
            rank_t: pair.rank_t(),
        });
    }
    let value = pair.restrict(pair.g().rho_tilde())?.coords()[0].clone();
    crate::rational::to_i64(&value)
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(|| Error::InvalidCharacteristic {
            labels: pair.sl2_labels().map(<[i64]>::to_vec).unwrap_or_default(),
            reason: format!("rho(h) = {} is not a natural number", fmt_q(&value)),
        })
}
