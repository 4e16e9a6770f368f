use qorth_core::bundles::{self, Bundle};
use qorth_core::freealg::NcPoly;
use qorth_core::scalar::{Regime, Scalar};
use qorth_core::{coinv, slq2, soq3};

fn u(src: &str) -> NcPoly {
    soq3::poly(src)
}

/// prod_{k<J} (q^{2n-k} - 1), rebuilt from q-powers.
fn c_oracle(j: i32, n: i32) -> Scalar {
    let mut acc = Scalar::one();
    for k in 0..j {
        acc = &acc * &(&Scalar::q_pow(2 * n - k) - &Scalar::one());
    }
    acc
}

#[test]
fn generators() {
    let (k, _) = bundles::generators(1);
    assert_eq!(k, vec![u("u11"), u("u21"), u("u31")]);
    let (_, b) = bundles::generators(-1);
    assert_eq!(b, vec![u("q*u31"), u("s*u21"), u("u11")]);
    let p0 = Bundle::build(0);
    assert_eq!((p0.size, p0.get(0, 0).clone()), (1, NcPoly::one(slq2::alphabet())));
}

#[test]
fn hopf_galois_sums() {
    let sum = |f: fn(usize) -> NcPoly, g: fn(usize) -> NcPoly| (1..=3).fold(u("0"), |acc, j| acc.add(&f(j).mul(&g(j))));
    assert!(soq3::verify_identity(&sum(bundles::eta, bundles::xi), &u("1")));
    assert!(soq3::verify_identity(&sum(bundles::beta, bundles::alpha), &u("1")));
    for n in [0, 2, -2] {
        let (kets, bras) = bundles::generators(n);
        let total = kets.iter().zip(&bras).fold(u("0"), |acc, (k, b)| acc.add(&b.mul(k)));
        assert!(soq3::verify_identity(&total, &u("1")), "n = {n}");
    }
}

#[test]
fn p1_matches_the_display() {
    let b = Bundle::build(1);
    let shown = [
        ["u11*u33", "s^-1*u11*u23", "q^-1*u11*u13"],
        ["u21*u33", "s^-1*u21*u23", "q^-1*u21*u13"],
        ["u31*u33", "s^-1*u31*u23", "q^-1*u31*u13"],
    ];
    for j in 0..3 {
        for k in 0..3 {
            assert_eq!(b.word_entry(j, k), u(shown[j][k]));
        }
    }
    let m1 = Bundle::build(-1);
    // the display lists p_-1 with both indices reversed
    let shown = [
        ["u33*u11", "s*u33*u21", "q*u33*u31"],
        ["u23*u11", "s*u23*u21", "q*u23*u31"],
        ["u13*u11", "s*u13*u21", "q*u13*u31"],
    ];
    for j in 0..3 {
        for k in 0..3 {
            assert_eq!(m1.word_entry(2 - j, 2 - k), u(shown[j][k]));
        }
    }
}

#[test]
fn idempotents() {
    for n in -2..=2 {
        let b = Bundle::build(n);
        assert_eq!(b.size, 3usize.pow(n.unsigned_abs()));
        assert!(b.square_defect().iter().all(NcPoly::is_zero), "n = {n}");
        for j in 0..b.size {
            for k in 0..b.size {
                assert!(coinv::is_coinvariant(&b.word_entry(j, k)));
            }
        }
    }
}

#[test]
fn traces_and_pairings() {
    let t1 = bundles::pairings(&Bundle::build(1)).trace;
    assert_eq!(t1, soq3::cover(&u("1 + (q - 1)*(y2 - 1) + (q - 1)^2/(q + 1)*(y2 - 1)^2")));
    for n in -3..=3 {
        let p = bundles::pairings(&Bundle::build(n));
        assert!(p.rank.is_one(), "rank at n = {n}");
        assert_eq!(p.degree.unwrap(), Scalar::int(-2 * n as i64), "degree at n = {n}");
        if n > 0 {
            assert_eq!(p.trace, bundles::trace_formula(n));
        }
    }
}

#[test]
fn degree_from_the_closed_form() {
    // mu((y2-1)^J) (q+1)^-J = (-1)^J/(q^J - 1), so the degree is sum (-1)^J C_J/(q^J - 1)
    for n in 1..=4 {
        let mut acc = Scalar::zero();
        for j in 1..=2 * n {
            let sign = if j % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
            acc = &acc + &(&(&sign * &c_oracle(j, n)) * &(&Scalar::q_pow(j) - &Scalar::one()).inv());
        }
        assert_eq!(acc, Scalar::int(-2 * n as i64), "n = {n}");
        let inv = (&Scalar::q() + &Scalar::one()).inv();
        let via_mu = (1..=2 * n).fold(Scalar::zero(), |a, j| &a + &(&(&inv.pow(j as i64) * &bundles::c_coeff(j, n)) * &bundles::mu_y(j)));
        assert_eq!(via_mu, acc);
    }
}

#[test]
fn c_recursions() {
    for n in 0..=3 {
        for j in 1..=2 * n {
            assert_eq!(bundles::c_coeff(j, n), c_oracle(j, n));
            let step = &(&Scalar::q_pow(2 * n + 1 - j) - &Scalar::one()) * &bundles::c_coeff(j - 1, n);
            assert_eq!(bundles::c_coeff(j, n), step);
            let shift = &(&(&Scalar::q_pow(2 * n + 2) - &Scalar::one()) * &(&Scalar::q_pow(2 * n + 1) - &Scalar::one())) * &bundles::c_coeff(j, n);
            assert_eq!(bundles::c_coeff(j + 2, n + 1), shift);
        }
    }
}

#[test]
fn self_adjointness() {
    for n in [1, 2, -1] {
        assert!(Bundle::build(n).self_adjoint_defect(Regime::QReal).iter().all(NcPoly::is_zero), "n = {n}");
    }
    assert!(Bundle::build(1).self_adjoint_defect(Regime::Unimodular).iter().any(|p| !p.is_zero()));
}

#[test]
fn auxiliary_identities() {
    for j in 1..=4 {
        let x = u(&format!("(y2 - 1)^{j}"));
        assert!(soq3::verify_identity(&u("u11").mul(&x), &x.mul(&u("u11")).scale(&Scalar::q_pow(2 * j))));
    }
    let x = "((y2 - 1)/(q + 1))";
    assert!(soq3::verify_identity(&u("u11*u33"), &u(&format!("1 + (q + q^2)*{x} + q^3*{x}^2"))));
    for (l, r) in coinv::section("bundle-aux") {
        assert!(soq3::verify_identity(&u(l), &u(r)), "{l} = {r}");
    }
}
