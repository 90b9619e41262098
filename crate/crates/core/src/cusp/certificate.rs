use std::collections::BTreeMap;

use super::monomial::Monomial;
use super::variable::{VarSet, Variable};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// One cusp certificate: a vanishing set `Z`, the factor `π_Z`, the factors
/// `π_{Z,u}` for `u ∈ Z ∖ {a12}`, and the claimed gap `#Z − deg π_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspCertificate {
    pub case_id: usize,
    pub z: VarSet,
    pub pi: Monomial,
    pub pi_u: BTreeMap<Variable, Monomial>,
    pub claimed_gap: Rational,
}

/// The certificate file shipped with the crate.
pub const SHIPPED: &str = include_str!("../../data/cusp_certificates.txt");

pub fn shipped_certificates() -> Vec<CuspCertificate> {
    parse_certificates(SHIPPED).expect("shipped certificate file parses")
}

/// Parses the line-oriented certificate format (see the shipped file header).
pub fn parse_certificates(text: &str) -> Result<Vec<CuspCertificate>> {
    struct Partial {
        case_id: usize,
        line: usize,
        z: Option<VarSet>,
        pi: Option<Monomial>,
        gap: Option<Rational>,
        pi_u: BTreeMap<Variable, Monomial>,
    }
    fn finish(p: Partial) -> Result<CuspCertificate> {
        let missing = |what: &str| Error::parse(p.line, format!("case {} lacks `{what}`", p.case_id));
        Ok(CuspCertificate {
            case_id: p.case_id,
            z: p.z.ok_or_else(|| missing("Z"))?,
            pi: p.pi.clone().ok_or_else(|| missing("pi"))?,
            claimed_gap: p.gap.clone().ok_or_else(|| missing("gap"))?,
            pi_u: p.pi_u,
        })
    }

    let mut out = Vec::new();
    let mut cur: Option<Partial> = None;
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::parse(lineno, msg);
        if let Some(rest) = line.strip_prefix("[case").and_then(|r| r.strip_suffix(']')) {
            if let Some(p) = cur.take() {
                out.push(finish(p)?);
            }
            let case_id = rest.trim().parse().map_err(|_| err(format!("bad case header {line:?}")))?;
            if out.iter().any(|c: &CuspCertificate| c.case_id == case_id) {
                return Err(err(format!("duplicate case {case_id}")));
            }
            cur = Some(Partial { case_id, line: lineno, z: None, pi: None, gap: None, pi_u: BTreeMap::new() });
            continue;
        }
        let p = cur.as_mut().ok_or_else(|| err("entry before any [case N] header".into()))?;
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected `key = value`: {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let wrap = |e: Error| err(e.to_string());
        match key.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["Z"] => p.z = Some(VarSet::parse(value).map_err(wrap)?),
            ["gap"] => p.gap = Some(parse_rational(value).map_err(wrap)?),
            ["pi"] => p.pi = Some(Monomial::parse(value).map_err(wrap)?),
            ["piu", u] => {
                let u: Variable = u.parse().map_err(wrap)?;
                if p.pi_u.insert(u, Monomial::parse(value).map_err(wrap)?).is_some() {
                    return Err(err(format!("duplicate piu {u}")));
                }
            }
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }
    if let Some(p) = cur.take() {
        out.push(finish(p)?);
    }
    Ok(out)
}
