//! End-to-end checks across modules on small pairs.

use fundseries::fundseries::{
    euler_multiplicity, ktype_table, verify_minimal_ktype, InducingModule,
};
use fundseries::genericity::{is_generic, norm2_shifted, sl2_threshold};
use fundseries::pair::ReductivePair;
use fundseries::parabolic::compatible_parabolic;
use fundseries::rational::q;
use fundseries::rootsys::{RootSystem, WeylCap};
use fundseries::weight::{TWeight, WeightVector};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(&s.parse().unwrap()).unwrap()
}

#[test]
fn rho_n_splits_over_grid() {
    let pairs = [
        ReductivePair::sl2(&rs("A2"), &[2, 2]).unwrap(),
        ReductivePair::sl2(&rs("B3"), &[2, 2, 2]).unwrap(),
        ReductivePair::cartan(&rs("B2")).unwrap(),
        ReductivePair::levi(&rs("A3"), &[0, 2]).unwrap(),
        ReductivePair::levi(&rs("G2"), &[1]).unwrap(),
    ];
    for p in &pairs {
        let g = p.g();
        for a in 1..4i64 {
            for b in 0..3i64 {
                let x = &g.rho_tilde().scaled(&q(a)) + &g.simple_roots()[0].scaled(&q(b));
                let mu = p.restrict(&x).unwrap();
                if !p.is_dominant_integral(&mu) {
                    continue;
                }
                let lambda = &mu + &p.rho().scaled(&q(2));
                let Ok(par) = compatible_parabolic(p, &lambda) else {
                    continue;
                };
                assert_eq!(par.rho_n, p.rho() + &par.rho_n_perp);
                assert_eq!(par.s + par.r, par.ch_t_n.size());
            }
        }
    }
}

#[test]
fn g2_principal_table_has_unique_minimum() {
    let p = ReductivePair::sl2(&rs("G2"), &[2, 2]).unwrap();
    let threshold = sl2_threshold(&p).unwrap() as i64;
    let m = threshold - 1;
    assert!(is_generic(&p, &TWeight::from_ints(&[m])).unwrap().holds);
    let (par, e) = InducingModule::from_ktype(&p, &TWeight::from_ints(&[m]), None).unwrap();
    let cutoff = norm2_shifted(&p, &e.mu).unwrap() + q(2);
    let table = ktype_table(&p, &par, &e, &cutoff, WeylCap::default()).unwrap();
    let report = verify_minimal_ktype(&table, &e, &p).unwrap();
    assert!(report.passed, "{report:?}");
}

#[test]
fn levi_pair_with_nontrivial_weyl_group() {
    // k = sl2 + Cartan inside sl4 on α2; W_k has two elements
    let a3 = rs("A3");
    let p = ReductivePair::levi(&a3, &[1]).unwrap();
    let mu = p.restrict(&a3.rho_tilde().scaled(&q(4))).unwrap();
    let report = is_generic(&p, &mu).unwrap();
    let (par, e) = InducingModule::from_ktype(&p, &mu, None).unwrap();
    assert_eq!(
        euler_multiplicity(&p, &par, &e, &mu, WeylCap::default()).unwrap(),
        1
    );
    let cutoff = norm2_shifted(&p, &mu).unwrap() + q(8);
    let table = ktype_table(&p, &par, &e, &cutoff, WeylCap::default()).unwrap();
    assert_eq!(table.get(&mu), 1);
    if report.holds {
        assert!(verify_minimal_ktype(&table, &e, &p).unwrap().passed);
    }
    for entry in &table.entries {
        assert!(p.is_dominant_integral(&entry.delta));
        assert!(entry.norm2_shifted <= cutoff);
    }
}

#[test]
fn generic_verdicts_are_monotone_for_all_small_characteristics() {
    for name in ["A1", "A2", "B2", "G2", "A3"] {
        let g = rs(name);
        let n = g.rank();
        for code in 1..3usize.pow(n as u32) {
            let labels: Vec<i64> = (0..n)
                .map(|i| ((code / 3usize.pow(i as u32)) % 3) as i64)
                .collect();
            let Ok(p) = ReductivePair::sl2(&g, &labels) else {
                continue;
            };
            let verdicts: Vec<bool> = (0..12)
                .map(|m| is_generic(&p, &TWeight::from_ints(&[m])).unwrap().holds)
                .collect();
            assert!(
                verdicts.windows(2).all(|w| !w[0] || w[1]),
                "{name} {labels:?}: {verdicts:?}"
            );
        }
    }
}
