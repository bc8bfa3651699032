//! Acceptance suite: ten end-to-end criteria, one test (and one pass/fail
//! line) each, covering the full catalog sweep, the closed-form profile
//! formulas, the structural predicates and the independent oracles.

use std::sync::OnceLock;

use rayon::prelude::*;

use u3atlas::catalog::{
    self, enumerate, rk_pairs, c_group_parameters, reference, CatalogEntry, SeriesSpec,
    VerificationReport,
};
use u3atlas::chardeg::{self, DegreeProfile};
use u3atlas::cyclotomic::Cyclotomic;
use u3atlas::engine::closure;
use u3atlas::genlib::{gen_e, gen_l};
use u3atlas::mat3::Mat3;

fn profile(pairs: &[(u64, u64)]) -> DegreeProfile {
    DegreeProfile::from_pairs(pairs)
}

/// Full catalog verification, computed once and shared by all criteria.
fn sweep() -> &'static [(CatalogEntry, VerificationReport)] {
    static SWEEP: OnceLock<Vec<(CatalogEntry, VerificationReport)>> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let entries = enumerate(2000);
        entries
            .into_par_iter()
            .map(|e| {
                let r = catalog::verify_entry(&e);
                (e, r)
            })
            .collect()
    })
}

fn find<'a>(spec: &str) -> &'a (CatalogEntry, VerificationReport) {
    let spec: SeriesSpec = spec.parse().unwrap();
    sweep().iter().find(|(e, _)| e.spec == spec).expect("catalog entry")
}

fn check_passed(report: &VerificationReport, name: &str) -> bool {
    report.checks.iter().any(|c| c.name == name && c.pass)
}

#[test]
fn c01_orders_all_series() {
    let results = sweep();
    assert!(results.len() >= 400, "expected 400+ entries, got {}", results.len());
    for (entry, report) in results {
        let order = report.computed.as_ref().map(|c| c.order);
        assert_eq!(
            order,
            Some(entry.expected_order),
            "order mismatch for {}",
            entry.spec
        );
    }
}

#[test]
fn c02_su3_u3_split() {
    for (entry, report) in sweep() {
        assert!(check_passed(report, "su3"), "su3 flag mismatch for {}", entry.spec);
    }
    let crossovers = [
        "Xi(m=1,j=2)",
        "Theta(m=1)",
        "UpsilonPrime(m=2)",
        "Zppnm(n=3,m=2)",
        "Zppnm(n=6,m=2)",
        "Zppnm(n=9,m=2)",
        "Zppnm(n=12,m=2)",
        "Zpnmj(n=3,m=2,j=1)",
        "Zpnmj(n=6,m=2,j=1)",
    ];
    for spec in crossovers {
        let (entry, report) = find(spec);
        assert!(entry.expected_su3, "{spec} should be flagged SU(3)");
        assert!(
            report.computed.as_ref().map(|c| c.su3) == Some(true),
            "{spec} should compute as an SU(3) subgroup"
        );
    }
}

#[test]
fn c03_degree_profiles_formula_series() {
    for (entry, report) in sweep() {
        if entry.expected_profile.is_some() {
            assert!(
                check_passed(report, "profile"),
                "profile mismatch for {}",
                entry.spec
            );
        }
    }
    let anchors: &[(&str, &[(u64, u64)])] = &[
        ("Delta3n2(n=2)", &[(1, 3), (3, 1)]),
        ("Delta6n2(n=2)", &[(1, 2), (2, 1), (3, 2)]),
        ("Delta6n2(n=3)", &[(1, 2), (2, 4), (3, 4)]),
        ("D3ll(l=3)", &[(1, 6), (2, 3), (3, 12), (6, 1)]),
        ("T(r=7,k=2,m=2)", &[(1, 9), (3, 6)]),
        ("Xi(m=1,j=3)", &[(1, 8), (3, 16), (4, 4)]),
        ("Pi(m=1,j=2)", &[(1, 8), (2, 2), (3, 16), (6, 4), (8, 2)]),
        ("Upsilon(m=2)", &[(1, 3), (2, 3), (3, 7), (6, 6), (8, 3), (9, 2)]),
        ("Ytildej(j=0)", &[(1, 6), (2, 3), (3, 12), (6, 1)]),
    ];
    for (spec, pairs) in anchors {
        let (_, report) = find(spec);
        let computed = report.computed.as_ref().and_then(|c| c.profile.clone());
        assert_eq!(computed, Some(profile(pairs)), "anchor profile for {spec}");
    }
}

#[test]
fn c04_exceptional_fixtures() {
    let fixtures: &[(&str, &[(u64, u64)])] = &[
        ("Xi(m=1,j=2)", &[(1, 4), (3, 8), (4, 2)]),
        ("Theta(m=1)", &[(1, 4), (2, 1), (3, 8), (6, 2), (8, 1)]),
        ("UpsilonPrime(m=2)", &[(1, 3), (2, 3), (3, 7), (6, 6), (8, 3), (9, 2)]),
    ];
    for (spec, pairs) in fixtures {
        let (_, report) = find(spec);
        let computed = report.computed.as_ref().and_then(|c| c.profile.clone());
        assert_eq!(computed, Some(profile(pairs)), "exceptional profile for {spec}");
    }
}

#[test]
fn c05_sum_rules_everywhere() {
    for (entry, report) in sweep() {
        assert!(check_passed(report, "sum_rules"), "sum rules for {}", entry.spec);
        let c = report.computed.as_ref().unwrap();
        let p = c.profile.as_ref().unwrap();
        assert_eq!(p.sum_of_squares(), c.order, "d^2 sum for {}", entry.spec);
        assert_eq!(p.total(), c.class_count as u64, "class count for {}", entry.spec);
        let ab: u64 = c.abelian_invariants.iter().product();
        assert_eq!(p.count_of(1), ab, "singlet count for {}", entry.spec);
    }
}

#[test]
fn c06_conclusion_trichotomy() {
    for (entry, report) in sweep() {
        assert!(
            check_passed(report, "monomial"),
            "trichotomy check for {}",
            entry.spec
        );
    }
}

#[test]
fn c07_cyclic_factor_predicate() {
    for (entry, report) in sweep() {
        let c = report.computed.as_ref().unwrap();
        assert_eq!(c.cyclic_factor, None, "cyclic factor on {}", entry.spec);
    }
    let a4_z2 = closure(&[gen_e(), gen_l(2), Mat3::identity(1).neg()], 1000).unwrap();
    assert_eq!(a4_z2.has_cyclic_direct_factor(), Some(2));
    let delta12_z5 = closure(
        &[gen_e(), gen_l(2), Mat3::scalar(Cyclotomic::root_of_unity(5, 1))],
        1000,
    )
    .unwrap();
    assert_eq!(delta12_z5.has_cyclic_direct_factor(), Some(5));
}

#[test]
fn c08_parameter_tables() {
    assert_eq!(rk_pairs(217), reference::RK_PAIRS);
    assert_eq!(c_group_parameters(2000), reference::C_PARAMS);
}

#[test]
fn c09_isomorphy_fingerprints() {
    let fp = |s: &str| {
        let spec: SeriesSpec = s.parse().unwrap();
        catalog::build(&spec).unwrap().fingerprint(0).unwrap()
    };
    assert_eq!(fp("Xn(n=3)"), fp("Wnm(n=1,m=2)"));
    assert_eq!(fp("Xn(n=9)"), fp("Jm(m=1)"));
    assert_eq!(fp("Znm(n=9,m=2)"), fp("Zpnm(n=9,m=2)"));
    assert_eq!(fp("Hnmj(n=3,m=2,j=2)"), fp("Gmj(m=2,j=2)"));
    for (m, j) in [(1, 3), (1, 4), (2, 3)] {
        let xi = find(&format!("Xi(m={m},j={j})"));
        let xihat = find(&format!("XiHat(m={m},j={j})"));
        let xi_profile = xi.1.computed.as_ref().unwrap().profile.clone().unwrap();
        let xihat_profile = xihat.1.computed.as_ref().unwrap().profile.clone().unwrap();
        assert_eq!(xihat_profile, xi_profile.doubled(), "doubling for ({m},{j})");
    }
}

#[test]
fn c10_oracle_equivalence() {
    let small: Vec<&CatalogEntry> = sweep()
        .iter()
        .map(|(e, _)| e)
        .filter(|e| e.expected_order <= 200)
        .collect();
    assert!(!small.is_empty());
    small.par_iter().for_each(|entry| {
        let g = catalog::build(&entry.spec).unwrap();
        let n = g.order() as u32;
        let mut commuting: u64 = 0;
        for x in 0..n {
            for y in 0..n {
                if g.mult(x, y) == g.mult(y, x) {
                    commuting += 1;
                }
            }
        }
        let class_count = g.conjugacy_classes().count() as u64;
        assert_eq!(
            commuting / u64::from(n),
            class_count,
            "commuting-pair oracle for {}",
            entry.spec
        );
    });

    let medium: Vec<&CatalogEntry> = sweep()
        .iter()
        .map(|(e, _)| e)
        .filter(|e| e.expected_order <= 300)
        .collect();
    medium.par_iter().for_each(|entry| {
        let g = catalog::build(&entry.spec).unwrap();
        let p1 = chardeg::choose_prime(&g);
        let p2 = chardeg::admissible_primes(g.exponent(), g.order() as u64)
            .find(|&p| p > p1)
            .unwrap();
        let d1 = chardeg::character_degrees_with_prime(&g, p1, chardeg::DEFAULT_SEED).unwrap();
        let d2 = chardeg::character_degrees_with_prime(&g, p2, chardeg::DEFAULT_SEED).unwrap();
        assert_eq!(d1, d2, "prime independence for {} (p {p1} vs {p2})", entry.spec);
    });
}
