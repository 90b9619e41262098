use num_traits::Zero;

use super::certificate::CuspCertificate;
use super::monomial::Monomial;
use super::variable::{measure_vector, weight, VarSet, Variable, WeightVector};
use crate::rational::{frac, int, to_fraction, Rational};
use crate::report::{render, Report};

fn a12() -> Variable {
    Variable::from_index(0)
}

fn show(w: &WeightVector) -> String {
    let parts: Vec<String> = w.0.iter().map(to_fraction).collect();
    format!("({})", parts.join(", "))
}

/// Exponent vector `measure + w(π_Z) + Σ_{u ∉ Z} w(u)`.
pub fn pi_exponents(cert: &CuspCertificate) -> WeightVector {
    cert.z
        .complement()
        .iter()
        .fold(measure_vector().add(&cert.pi.weight()), |acc, u| acc.add(&weight(u)))
}

/// `#Z − deg π_Z`.
pub fn gap(cert: &CuspCertificate) -> Rational {
    Rational::from_integer(cert.z.len().into()) - cert.pi.degree()
}

/// Checks the factor `π_Z`: its support avoids `Z`, all eight exponents are
/// negative, the gap matches the claimed value and is at least `1/10`.
pub fn verify_pi(cert: &CuspCertificate) -> Report {
    let n = cert.case_id;
    let mut r = Report::new(format!("cusp case {n}: pi_Z"));
    let anchor = "cusp bound for the piece with vanishing set Z";
    let clash = cert.pi.support().0 & cert.z.0;
    r.check(
        format!("case {n} pi support outside Z"),
        clash == 0,
        "support ∩ Z = {}",
        format!("{}", VarSet(clash)),
        anchor,
    );
    let e = pi_exponents(cert);
    let actual = match e.first_nonnegative() {
        None => show(&e),
        Some(k) => format!("s{} exponent {} in {}", k + 1, to_fraction(&e.0[k]), show(&e)),
    };
    r.check(format!("case {n} exponents negative"), e.first_nonnegative().is_none(), "all < 0", actual, anchor);
    let g = gap(cert);
    r.check(
        format!("case {n} gap matches"),
        g == cert.claimed_gap,
        render(&cert.claimed_gap),
        render(&g),
        "#Z − deg π_Z column",
    );
    r.check(
        format!("case {n} gap ≥ 1/10"),
        cert.claimed_gap >= frac(1, 10),
        "≥ 1/10",
        render(&cert.claimed_gap),
        "exponent bound 499/600",
    );
    let exponent = (int(50) - &g) / int(60);
    r.check(
        format!("case {n} bound exponent ≤ 499/600"),
        exponent <= frac(499, 600),
        "≤ 499/600",
        render(&exponent),
        "(50 − #Z + deg π_Z)/60",
    );
    r
}

/// Checks the factors `π_{Z,u}`.
///
/// For each `u ∈ Z ∖ {a12}`: the support avoids `Z`, the degree is 1 and no
/// exponent of `w(u) − w(π_{Z,u})` is positive. Finally `π_Z / Π_u π_{Z,u}`
/// must have nonnegative exponents. The number of components that are strictly
/// negative is reported for information.
pub fn verify_pi_u(cert: &CuspCertificate) -> Report {
    let n = cert.case_id;
    let mut r = Report::new(format!("cusp case {n}: pi_u"));
    let anchor = "factors π_{Z,u} for u in Z minus a12";
    let needed: Vec<Variable> = cert.z.iter().filter(|&u| u != a12()).collect();
    let have: Vec<Variable> = cert.pi_u.keys().copied().collect();
    let missing: Vec<String> = needed.iter().filter(|u| !cert.pi_u.contains_key(u)).map(|u| u.to_string()).collect();
    let extra: Vec<String> = have.iter().filter(|u| !needed.contains(u)).map(|u| u.to_string()).collect();
    r.check(
        format!("case {n} pi_u keys = Z minus a12"),
        missing.is_empty() && extra.is_empty(),
        format!("{} keys", needed.len()),
        format!("missing [{}], extra [{}]", missing.join(" "), extra.join(" ")),
        anchor,
    );

    let mut support_bad = Vec::new();
    let mut degree_bad = Vec::new();
    let mut weight_bad = Vec::new();
    let mut strict = 0usize;
    let mut total = 0usize;
    let mut product = Monomial::one();
    for (&u, m) in &cert.pi_u {
        if m.support().0 & cert.z.0 != 0 {
            support_bad.push(format!("{u}: {m}"));
        }
        if m.degree() != int(1) {
            degree_bad.push(format!("{u}: degree {}", to_fraction(&m.degree())));
        }
        let d = weight(u).sub(&m.weight());
        if let Some(k) = d.first_positive() {
            weight_bad.push(format!("{u}: s{} exponent {} in {}", k + 1, to_fraction(&d.0[k]), show(&d)));
        }
        strict += d.0.iter().filter(|x| **x < Rational::zero()).count();
        total += 8;
        product = product.mul(m);
    }
    r.check(format!("case {n} pi_u supports outside Z"), support_bad.is_empty(), "none inside Z", list(&support_bad), anchor);
    r.check(format!("case {n} pi_u degree 1"), degree_bad.is_empty(), "all degree 1", list(&degree_bad), anchor);
    r.check(
        format!("case {n} w(u/pi_u) has no positive exponent"),
        weight_bad.is_empty(),
        "all components ≤ 0",
        list(&weight_bad),
        anchor,
    );
    r.info(
        format!("case {n} strictly negative components of w(u/pi_u)"),
        format!("{strict} of {total}"),
        anchor,
    );
    let resid = cert.pi.quotient_exponents(&product);
    let negative: Vec<String> = resid
        .iter()
        .filter(|(_, e)| **e < Rational::zero())
        .map(|(u, e)| format!("{u}^{}", to_fraction(e)))
        .collect();
    r.check(
        format!("case {n} pi_Z / prod pi_u nonnegative"),
        negative.is_empty(),
        "all exponents ≥ 0",
        list(&negative),
        anchor,
    );
    r
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "ok".into()
    } else {
        items.join("; ")
    }
}

/// Both verifiers over a set of certificates.
pub fn verify_all(certs: &[CuspCertificate]) -> Report {
    let mut r = Report::new("cusp certificates");
    for c in certs {
        r.extend(verify_pi(c));
        r.extend(verify_pi_u(c));
    }
    r
}
