//! k-type content of the fundamental series attached to a minimal compatible
//! parabolic p = m ⊕ n and an irreducible m-module E.
//!
//! The multiplicity of V(δ) is computed as the Euler characteristic
//!
//!   dim E · Σ_{w ∈ W_k} (−1)^ℓ(w) · P(w(δ+ρ) − ρ − ω − 2ρ_n^⊥)
//!
//! where P counts the ways of writing a weight as an ℕ-combination of the
//! weights of n ∩ k⊥ (so P gives weight multiplicities of S(n ∩ k⊥)). Kostant's
//! theorem supplies the H(n ∩ k, V(δ)) weights w(δ+ρ) − ρ, E contributes the
//! scalar ω since t is central in m, and the top exterior power of n ∩ k⊥
//! contributes 2ρ_n^⊥. For generic V(μ) the alternating sum is an honest
//! multiplicity, nonzero only in degree s = dim(n ∩ k).

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genericity::{is_generic, norm2_shifted};
use crate::linalg::Matrix;
use crate::pair::ReductivePair;
use crate::parabolic::{compatible_parabolic, singular_root, CompatibleParabolic};
use crate::rational::{fmt_q, q, serialize_q, Q};
use crate::rootsys::{weyl_dimension, RootSystem, WeylCap, WeylElement};
use crate::weight::{half_sum, GWeight, TWeight, WeightMultiset, WeightVector};

/// Upper limit on the number of S(n ∩ k⊥) exponents visited while building a table.
const MAX_EXPONENTS: usize = 2_000_000;

/// An irreducible m-module E with b ∩ m-highest weight ν.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducingModule {
    pub nu: GWeight,
    /// ν restricted to t; t acts on E by this scalar.
    pub omega: TWeight,
    pub dim_e: u128,
    /// ω + 2ρ_n^⊥, the highest weight of the expected minimal k-type.
    pub mu: TWeight,
    /// Half-sum of the positive system n ∪ (m ∩ Δ⁺) of the Borel b ⊂ p.
    pub rho_b: GWeight,
}

impl InducingModule {
    /// Validates ν against the minimal parabolic `par`.
    pub fn new(pair: &ReductivePair, par: &CompatibleParabolic, nu: GWeight) -> Result<Self> {
        if !par.minimal {
            return Err(Error::NonMinimalParabolic);
        }
        let g = pair.g();
        nu.check_dim(g.rank(), "nu")?;
        let dim_e = weyl_dimension(g.form(), &par.m_positive_roots(pair), &nu)?;
        let omega = pair.restrict(&nu)?;
        let mu = &omega + &par.rho_n_perp.scaled(&q(2));
        let borel: WeightMultiset<GWeight> = par.borel_positive_roots(pair).into_iter().collect();
        let rho_b = half_sum(&borel, g.rank())?;
        Ok(InducingModule {
            nu,
            omega,
            dim_e,
            mu,
            rho_b,
        })
    }

    /// Starts from the k-type μ: builds p for λ = μ + 2ρ, sets ω = μ − 2ρ_n^⊥
    /// and takes ν to be the given weight or, by default, the orthogonal lift of ω.
    pub fn from_ktype(
        pair: &ReductivePair,
        mu: &TWeight,
        nu: Option<GWeight>,
    ) -> Result<(CompatibleParabolic, InducingModule)> {
        pair.check_dominant_integral(mu)?;
        let lambda = mu + &pair.rho().scaled(&q(2));
        if let Some(root) = singular_root(pair, &lambda)? {
            return Err(Error::Irregular {
                lambda: lambda.to_string(),
                root: root.to_string(),
            });
        }
        let par = compatible_parabolic(pair, &lambda)?;
        let omega = mu - &par.rho_n_perp.scaled(&q(2));
        let nu = match nu {
            Some(nu) => nu,
            None => pair.lift(&omega)?,
        };
        let module = InducingModule::new(pair, &par, nu)?;
        if module.omega != omega {
            return Err(Error::InvalidModule(format!(
                "nu restricts to {} on t but mu - 2 rho_n_perp = {omega}",
                module.omega
            )));
        }
        Ok((par, module))
    }
}

/// The Z(g)-character θ_{ν+ρ̃}, stored as the dominant element of its W_g-orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InfinitesimalCharacter {
    pub representative: GWeight,
}

pub fn infinitesimal_character(g: &RootSystem, e: &InducingModule) -> InfinitesimalCharacter {
    let (representative, _) = g.dominant_representative(&(&e.nu + &e.rho_b));
    InfinitesimalCharacter { representative }
}

/// (ℓ(w), w(δ+ρ) − ρ) for every w ∈ W_k, sorted by length then weight.
pub fn kostant_weights(
    pair: &ReductivePair,
    delta: &TWeight,
    cap: WeylCap,
) -> Result<Vec<(usize, TWeight)>> {
    pair.check_dominant_integral(delta)?;
    let weyl = pair.k().weyl_group(cap)?;
    Ok(kostant_from(pair, &weyl, delta))
}

fn kostant_from(
    pair: &ReductivePair,
    weyl: &[WeylElement],
    delta: &TWeight,
) -> Vec<(usize, TWeight)> {
    let rho = pair.rho();
    let shifted = delta + rho;
    let mut out: Vec<(usize, TWeight)> = weyl
        .iter()
        .map(|w| (w.length, &pair.k().apply(w, &shifted) - rho))
        .collect();
    out.sort();
    out
}

/// Vector partition function of a multiset of weights, graded by a functional
/// that is strictly positive on every generator. Results are memoized.
#[derive(Debug)]
pub struct PartitionFunction {
    generators: Vec<TWeight>,
    gen_grades: Vec<Q>,
    form: Matrix,
    grading: TWeight,
    memo: HashMap<(usize, TWeight), u128>,
}

impl PartitionFunction {
    pub fn new(
        form: &Matrix,
        generators: &WeightMultiset<TWeight>,
        grading: &TWeight,
    ) -> Result<Self> {
        grading.check_dim(form.rows(), "grading")?;
        let mut gens = Vec::new();
        let mut grades = Vec::new();
        // a weight of multiplicity m is m independent generators
        for (beta, mult) in generators.iter() {
            beta.check_dim(form.rows(), "generator")?;
            let grade = form.bilinear(grading.coords(), beta.coords());
            if !grade.is_positive() {
                return Err(Error::GradingNotPositive {
                    generator: beta.to_string(),
                    grading: grading.to_string(),
                });
            }
            for _ in 0..mult {
                gens.push(beta.clone());
                grades.push(grade.clone());
            }
        }
        Ok(PartitionFunction {
            generators: gens,
            gen_grades: grades,
            form: form.clone(),
            grading: grading.clone(),
            memo: HashMap::new(),
        })
    }

    fn grade(&self, x: &TWeight) -> Q {
        self.form.bilinear(self.grading.coords(), x.coords())
    }

    /// Number of ways to write `target` as Σ n_i·generator_i with n_i ∈ ℕ.
    pub fn count(&mut self, target: &TWeight) -> Result<u128> {
        target.check_dim(self.form.rows(), "partition target")?;
        let grade = self.grade(target);
        self.count_from(0, target.clone(), grade)
    }

    fn count_from(&mut self, idx: usize, target: TWeight, grade: Q) -> Result<u128> {
        if target.is_zero() {
            return Ok(1);
        }
        if idx == self.generators.len() || !grade.is_positive() {
            return Ok(0);
        }
        let key = (idx, target);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let (idx, target) = key;
        let beta = self.generators[idx].clone();
        let step = self.gen_grades[idx].clone();
        let mut total: u128 = 0;
        let mut rest = target.clone();
        let mut rest_grade = grade;
        while !rest_grade.is_negative() {
            let n = self.count_from(idx + 1, rest.clone(), rest_grade.clone())?;
            total = total
                .checked_add(n)
                .ok_or_else(|| Error::Overflow("vector partitions".into()))?;
            rest = &rest - &beta;
            rest_grade -= &step;
        }
        self.memo.insert((idx, target), total);
        Ok(total)
    }
}

/// One-shot partition count; see [`PartitionFunction`].
pub fn partition_count(
    form: &Matrix,
    generators: &WeightMultiset<TWeight>,
    target: &TWeight,
    grading: &TWeight,
) -> Result<u128> {
    PartitionFunction::new(form, generators, grading)?.count(target)
}

/// Shared state for evaluating the alternating sum at many δ.
struct Engine<'a> {
    pair: &'a ReductivePair,
    module: &'a InducingModule,
    weyl: Vec<WeylElement>,
    partitions: PartitionFunction,
}

impl<'a> Engine<'a> {
    fn new(
        pair: &'a ReductivePair,
        par: &CompatibleParabolic,
        module: &'a InducingModule,
        cap: WeylCap,
    ) -> Result<Self> {
        if !par.minimal {
            return Err(Error::NonMinimalParabolic);
        }
        let expected_mu = &module.omega + &par.rho_n_perp.scaled(&q(2));
        if expected_mu != module.mu {
            return Err(Error::InvalidModule(format!(
                "module mu {} does not match omega + 2 rho_n_perp = {expected_mu}",
                module.mu
            )));
        }
        let weyl = pair.k().weyl_group(cap)?;
        let partitions = PartitionFunction::new(pair.t_form(), &par.ch_t_n_cap_kperp, &par.lambda)?;
        Ok(Engine {
            pair,
            module,
            weyl,
            partitions,
        })
    }

    /// Per-w partition counts (ℓ(w), P(w(δ+ρ) − ρ − μ)).
    fn terms(&mut self, delta: &TWeight) -> Result<Vec<(usize, u128)>> {
        self.pair.check_dominant_integral(delta)?;
        let kostant = kostant_from(self.pair, &self.weyl, delta);
        let mut out = Vec::with_capacity(kostant.len());
        for (length, weight) in kostant {
            let target = &weight - &self.module.mu;
            out.push((length, self.partitions.count(&target)?));
        }
        Ok(out)
    }

    fn euler(&mut self, delta: &TWeight) -> Result<i128> {
        let mut sum: i128 = 0;
        for (length, count) in self.terms(delta)? {
            let c = i128::try_from(count)
                .map_err(|_| Error::Overflow("Euler characteristic".into()))?;
            sum = if length % 2 == 0 {
                sum.checked_add(c)
            } else {
                sum.checked_sub(c)
            }
            .ok_or_else(|| Error::Overflow("Euler characteristic".into()))?;
        }
        let dim = i128::try_from(self.module.dim_e).map_err(|_| Error::Overflow("dim E".into()))?;
        sum.checked_mul(dim)
            .ok_or_else(|| Error::Overflow("Euler characteristic".into()))
    }
}

/// Euler characteristic Σ_i (−1)^i dim Hom_k(V(δ), F^i(p, E)).
pub fn euler_multiplicity(
    pair: &ReductivePair,
    par: &CompatibleParabolic,
    module: &InducingModule,
    delta: &TWeight,
    cap: WeylCap,
) -> Result<i128> {
    Engine::new(pair, par, module, cap)?.euler(delta)
}

/// Upper bound for dim Hom_k(V(δ), F^i(p, E)) from the length-i Weyl elements.
pub fn multiplicity_bound(
    pair: &ReductivePair,
    par: &CompatibleParabolic,
    module: &InducingModule,
    delta: &TWeight,
    degree: usize,
    cap: WeylCap,
) -> Result<u128> {
    let mut engine = Engine::new(pair, par, module, cap)?;
    let mut sum: u128 = 0;
    for (length, count) in engine.terms(delta)? {
        if length == degree {
            sum = sum
                .checked_add(count)
                .ok_or_else(|| Error::Overflow("multiplicity bound".into()))?;
        }
    }
    sum.checked_mul(module.dim_e)
        .ok_or_else(|| Error::Overflow("multiplicity bound".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub delta: TWeight,
    #[serde(serialize_with = "serialize_q")]
    pub norm2_shifted: Q,
    pub value: i128,
}

/// Nonzero values of the Euler characteristic at k-types within a norm ball,
/// sorted by shifted norm and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub entries: Vec<TableEntry>,
    #[serde(serialize_with = "serialize_q")]
    pub cutoff: Q,
    pub s: usize,
    pub r: usize,
}

impl MultiplicityTable {
    pub fn get(&self, delta: &TWeight) -> i128 {
        self.entries
            .iter()
            .find(|e| &e.delta == delta)
            .map_or(0, |e| e.value)
    }
}

/// All δ with nonzero Euler characteristic and ‖δ + 2ρ‖² ≤ `cutoff`.
///
/// A δ can only contribute if w(δ+ρ) = μ + ρ + ξ for some w ∈ W_k and some
/// ℕ-combination ξ of the weights of n ∩ k⊥, so δ + ρ is the dominant
/// representative of μ + ρ + ξ. Since ⟨δ+ρ, ρ⟩ ≥ 0 the cutoff bounds
/// ‖μ+ρ+ξ‖² by cutoff − ‖ρ‖², and Cauchy–Schwarz turns that into a bound on
/// the λ-grading of ξ, which makes the enumeration finite.
pub fn ktype_table(
    pair: &ReductivePair,
    par: &CompatibleParabolic,
    module: &InducingModule,
    cutoff: &Q,
    cap: WeylCap,
) -> Result<MultiplicityTable> {
    let floor = norm2_shifted(pair, &module.mu)?;
    if *cutoff < floor {
        return Err(Error::CutoffTooSmall {
            cutoff: fmt_q(cutoff),
            required: fmt_q(&floor),
        });
    }
    let mut engine = Engine::new(pair, par, module, cap)?;
    let rho = pair.rho();
    let lambda = &par.lambda;
    let ip = |x: &TWeight, y: &TWeight| pair.t_pair(x, y);

    let base = &module.mu + rho;
    let base_grade = ip(lambda, &base)?;
    let ball = cutoff - ip(rho, rho)?;
    let grade_cap = ip(lambda, lambda)? * &ball;
    let within = |g: &Q| -> bool {
        let total = &base_grade + g;
        !total.is_positive() || &total * &total <= grade_cap
    };

    let generators: Vec<(TWeight, Q)> = par
        .ch_t_n_cap_kperp
        .support()
        .map(|b| Ok((b.clone(), ip(lambda, b)?)))
        .collect::<Result<_>>()?;

    let mut candidates: BTreeSet<TWeight> = BTreeSet::new();
    let mut visited = 0usize;
    let mut stack: Vec<(usize, TWeight, Q)> = vec![(0, TWeight::zero(pair.rank_t()), Q::zero())];
    while let Some((idx, xi, grade)) = stack.pop() {
        if idx == generators.len() {
            visited += 1;
            if visited > MAX_EXPONENTS {
                return Err(Error::EnumerationCap(format!(
                    "more than {MAX_EXPONENTS} exponents below cutoff {}",
                    fmt_q(cutoff)
                )));
            }
            let eta = &base + &xi;
            if ip(&eta, &eta)? > ball {
                continue;
            }
            let dominant = pair.k().dominant_representative(&eta);
            let k = pair.k();
            if (0..k.rank()).any(|i| k.coroot_pairing(&dominant, i).is_zero()) {
                continue;
            }
            let delta = &dominant - rho;
            if pair.is_dominant_integral(&delta) {
                candidates.insert(delta);
            }
            continue;
        }
        let (beta, step) = &generators[idx];
        let mut cur = xi;
        let mut cur_grade = grade;
        while within(&cur_grade) {
            stack.push((idx + 1, cur.clone(), cur_grade.clone()));
            cur = &cur + beta;
            cur_grade += step;
        }
    }

    let mut entries = Vec::new();
    for delta in candidates {
        let norm = norm2_shifted(pair, &delta)?;
        if norm > *cutoff {
            continue;
        }
        let value = engine.euler(&delta)?;
        if value != 0 {
            entries.push(TableEntry {
                delta,
                norm2_shifted: norm,
                value,
            });
        }
    }
    entries.sort_by(|a, b| {
        a.norm2_shifted
            .cmp(&b.norm2_shifted)
            .then_with(|| a.delta.cmp(&b.delta))
    });
    Ok(MultiplicityTable {
        entries,
        cutoff: cutoff.clone(),
        s: par.s,
        r: par.r,
    })
}

/// Checks of the minimal-k-type statement on a computed table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalKTypeReport {
    /// Whether V(μ) is generic; the checks below are only predicted then.
    pub generic: bool,
    pub entry_at_mu: i128,
    pub dim_e: u128,
    pub mu_entry_ok: bool,
    /// Nonzero entries other than μ with shifted norm ≤ that of μ.
    pub not_above_mu: Vec<TWeight>,
    pub negative_entries: Vec<TWeight>,
    pub passed: bool,
}

/// Verifies that μ carries dim E, that every other entry has strictly larger
/// shifted norm, and that no entry is negative.
pub fn verify_minimal_ktype(
    table: &MultiplicityTable,
    module: &InducingModule,
    pair: &ReductivePair,
) -> Result<MinimalKTypeReport> {
    let generic = is_generic(pair, &module.mu)
        .map(|r| r.holds)
        .unwrap_or(false);
    let mu_norm = norm2_shifted(pair, &module.mu)?;
    let entry_at_mu = table.get(&module.mu);
    let mu_entry_ok = i128::try_from(module.dim_e).is_ok_and(|d| d == entry_at_mu);
    let not_above_mu: Vec<TWeight> = table
        .entries
        .iter()
        .filter(|e| e.delta != module.mu && e.norm2_shifted <= mu_norm)
        .map(|e| e.delta.clone())
        .collect();
    let negative_entries: Vec<TWeight> = table
        .entries
        .iter()
        .filter(|e| e.value < 0)
        .map(|e| e.delta.clone())
        .collect();
    let passed = mu_entry_ok && not_above_mu.is_empty() && negative_entries.is_empty();
    Ok(MinimalKTypeReport {
        generic,
        entry_at_mu,
        dim_e: module.dim_e,
        mu_entry_ok,
        not_above_mu,
        negative_entries,
        passed,
    })
}
