mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use common::{big, binom, factorial, long, q, Q};
use setwise_ekr::certify::{
    certify, low_dim_claims, low_dim_eigen_report, route, verify_tail, Claim, Provenance, Route,
};
use setwise_ekr::error::CertifyError;
use setwise_ekr::partitions::Partition;
use setwise_ekr::schemes::full_spectrum;
use setwise_ekr::weights::Family;

fn fact(n: u32) -> BigInt {
    BigInt::from(factorial(n.into()))
}

#[test]
fn certificate_22_4() {
    let c = certify(22, 4).unwrap();
    assert!(c.is_certified());
    assert_eq!(c.max_eigenvalue, q(7314));
    assert_eq!(c.multiplicity, 2);
    assert_eq!(c.min_eigenvalue, -Q::one());
    assert_eq!(c.sym_bound, fact(4) * fact(18));
    assert_eq!(c.alt_bound, Some(fact(4) * fact(18) / 2));
    assert!(c.conclusions.sym_density_one && c.conclusions.alt_density_one);
    assert!(matches!(c.provenance, Provenance::ClosedForm { .. }));
    assert!(c.violations.is_empty());
}

#[test]
fn certificate_bounds() {
    let c = certify(27, 3).unwrap();
    assert_eq!(c.alt_bound, Some(fact(24) * 3));
    let c = certify(20, 3).unwrap();
    assert_eq!(c.sym_bound, fact(17) * 6);
    let c = certify(32, 5).unwrap();
    assert_eq!(c.max_eigenvalue, q(201375));
    assert_eq!(c.multiplicity, 2);
}

#[test]
fn certificates_at_small_n_use_search() {
    for (n, k) in [(7, 3), (10, 4), (12, 5)] {
        let c = certify(n, k).unwrap();
        assert!(c.is_certified(), "({n}, {k})");
        assert!(matches!(c.provenance, Provenance::LpSearch { .. }));
        assert_eq!(c.max_eigenvalue, big(&binom(n.into(), k.into())) - Q::one());
        let pins: Vec<Partition> = (1..=k).map(|i| long(n, &[i])).collect();
        for p in &pins {
            assert!(c.min_attained_at.contains(p), "({n}, {k}) {p}");
        }
    }
}

#[test]
fn routing() {
    assert_eq!(route(22, 4).unwrap(), Route::ClosedForm(Family::K4Even));
    assert_eq!(route(21, 4).unwrap(), Route::Search);
    assert_eq!(route(27, 4).unwrap(), Route::Search);
    assert_eq!(route(29, 4).unwrap(), Route::ClosedForm(Family::K4Odd));
    assert!(matches!(route(6, 4), Err(CertifyError::Unsupported { .. })));
    assert!(matches!(route(20, 6), Err(CertifyError::Unsupported { .. })));
}

#[test]
fn tails_below_one() {
    for (family, n, threshold) in [
        (Family::K4Even, 22, BigInt::from(binom(22, 5))),
        (Family::K3Even, 20, BigInt::from(binom(20, 4))),
        (Family::K5Odd, 31, BigInt::from(binom(31, 6)) * 2),
    ] {
        let spectrum = full_spectrum(&family.closed_form(n).unwrap());
        let report = verify_tail(&spectrum, &threshold).unwrap();
        assert!(report.ok() && report.shapes > 0, "{family}");
        assert_eq!(threshold, family.tail_threshold(n));
    }
}

#[test]
fn proof_step_equalities() {
    let s = full_spectrum(&Family::K3Odd.closed_form(27).unwrap());
    assert_eq!(s.get(&Partition::column(27)).unwrap(), &(big(&binom(27, 3)) - Q::one()));
    let s = full_spectrum(&Family::K4Even.closed_form(22).unwrap());
    assert!(s.get(&long(22, &[1, 1, 1])).unwrap().is_zero());
    let s = full_spectrum(&Family::K4Odd.closed_form(29).unwrap());
    assert!(s.get(&long(29, &[5])).unwrap().is_zero());
    let s = full_spectrum(&Family::K5Odd.closed_form(31).unwrap());
    assert!(s.get(&long(31, &[1, 1, 1, 1, 1])).unwrap().is_positive());
}

/// Two sampled `n` per family, starting where certification uses the form.
fn two_samples(family: Family) -> [u32; 2] {
    let m = family.certified_min();
    let m = if m.is_multiple_of(2) == family.even_n() { m } else { m + 1 };
    [m, m + 6]
}

#[test]
fn every_claimed_sign_holds() {
    for family in Family::ALL {
        for n in two_samples(family) {
            let spectrum = full_spectrum(&family.closed_form(n).unwrap());
            let report = low_dim_eigen_report(&spectrum, family).unwrap();
            assert_eq!(report.lines.len(), low_dim_claims(family).len());
            assert!(report.lines.iter().all(|l| l.holds));
        }
    }
}

#[test]
fn claims_cover_every_low_shape() {
    // The odd k = 3 form only carries the sign-character claim.
    for family in Family::ALL.into_iter().filter(|&f| f != Family::K3Odd) {
        let claimed: Vec<&[u32]> = low_dim_claims(family).iter().filter(|c| !c.1).map(|c| c.0).collect();
        for tail in family.table_row_tails() {
            assert!(claimed.contains(&tail), "{family} misses {tail:?}");
        }
    }
    assert!(low_dim_claims(Family::K3Odd).iter().any(|c| c.2 == Claim::Top));
}

#[test]
fn nonpositive_list_is_consistent() {
    let c = certify(24, 4).unwrap();
    assert!(c.nonpositive.iter().all(|e| !e.value.is_positive()));
    assert!(c.nonpositive.iter().any(|e| e.value == -Q::one()));
    assert!(c.notes.is_empty());
    let c = certify(25, 4).unwrap();
    assert!(!c.notes.is_empty());
    assert!(c.tail.is_none() || c.tail.as_ref().unwrap().ok());
    let json = serde_json::to_value(&c).unwrap();
    assert_eq!(json["schema"], 1);
    assert!(json["max_eigenvalue"].as_str().unwrap().ends_with("/1"));
    assert!(!Zero::is_zero(&c.stabilizer_order()));
}
