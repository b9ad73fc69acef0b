//! The ring file format and the element grammar used on the command line.
//!
//! A ring file is a JSON object with exactly the fields `vars` (ordered
//! variable names), `char` (a prime), and `ideal` (monomial strings):
//!
//! ```json
//! { "vars": ["x", "y"], "char": 32003, "ideal": ["x^2", "x*y"] }
//! ```
//!
//! Monomials follow `name('^'digits)?('*'name('^'digits)?)*`. Elements
//! passed via `--ideal`/`--sop` extend this to integer linear combinations:
//! `term (('+'|'-') term)*` with `term = (digits '*')? monomial | digits`.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingSpec;

pub fn parse_monomial(s: &str, vars: &[String]) -> Result<Monomial> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::MalformedMonomial(s.into(), "empty".into()));
    }
    if s == "1" {
        return Ok(Monomial::one(vars.len()));
    }
    let mut exps = vec![0u32; vars.len()];
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let exp: u32 = e.trim().parse().map_err(|_| {
                    Error::MalformedMonomial(s.into(), format!("bad exponent `{e}`"))
                })?;
                (n.trim(), exp)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(Error::MalformedMonomial(s.into(), "empty factor".into()));
        }
        let t = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        exps[t] += exp;
    }
    Ok(Monomial::new(exps))
}

/// Parse a linear combination of monomials into (monomial, coefficient)
/// terms; coefficients may be negative and are reduced later, against the
/// ring's characteristic.
pub fn parse_element(s: &str, vars: &[String]) -> Result<Vec<(Monomial, i64)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::MalformedElement(s.into(), "empty".into()));
    }
    let mut terms = Vec::new();
    let mut rest = s;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let end = rest
            .char_indices()
            .find(|&(i, ch)| (ch == '+' || ch == '-') && i > 0)
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(Error::MalformedElement(s.into(), "empty term".into()));
        }
        let (coeff, mono) = split_term(term, s, vars)?;
        terms.push((mono, sign * coeff));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = rest[end + 1..].trim_start();
        if rest.is_empty() {
            return Err(Error::MalformedElement(s.into(), "trailing operator".into()));
        }
    }
    Ok(terms)
}

fn split_term(term: &str, whole: &str, vars: &[String]) -> Result<(i64, Monomial)> {
    // pure integer term
    if term.chars().all(|c| c.is_ascii_digit()) {
        let c: i64 = term
            .parse()
            .map_err(|_| Error::MalformedElement(whole.into(), format!("bad integer `{term}`")))?;
        return Ok((c, Monomial::one(vars.len())));
    }
    // leading coefficient: digits '*' rest
    if term.starts_with(|c: char| c.is_ascii_digit()) {
        let Some((num, rest)) = term.split_once('*') else {
            return Err(Error::MalformedElement(
                whole.into(),
                format!("expected `*` after coefficient in `{term}`"),
            ));
        };
        let c: i64 = num.trim().parse().map_err(|_| {
            Error::MalformedElement(whole.into(), format!("bad coefficient `{num}`"))
        })?;
        return Ok((c, parse_monomial(rest, vars)?));
    }
    Ok((1, parse_monomial(term, vars)?))
}

/// Comma-separated list of elements, for `--ideal` and `--sop`.
pub fn parse_element_list(s: &str, vars: &[String]) -> Result<Vec<Vec<(Monomial, i64)>>> {
    s.split(',')
        .map(|part| parse_element(part, vars))
        .collect()
}

/// Strict parse of the ring file document.
pub fn parse_ring_file(text: &str) -> Result<RingSpec> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::MalformedRingFile(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::MalformedRingFile("top level must be an object".into()))?;
    for key in obj.keys() {
        if key != "vars" && key != "char" && key != "ideal" {
            return Err(Error::MalformedRingFile(format!("unexpected field `{key}`")));
        }
    }
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::MalformedRingFile("missing `vars` array".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(String::from)
                .ok_or_else(|| Error::MalformedRingFile("`vars` entries must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let char_p = obj
        .get("char")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::MalformedRingFile("missing numeric `char`".into()))?;
    let ideal_strings: Vec<String> = obj
        .get("ideal")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::MalformedRingFile("missing `ideal` array".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(String::from)
                .ok_or_else(|| Error::MalformedRingFile("`ideal` entries must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let gens: Vec<Monomial> = ideal_strings
        .iter()
        .map(|s| parse_monomial(s, &vars))
        .collect::<Result<_>>()?;
    RingSpec::new(vars, char_p, gens)
}

/// Canonical emission; parses back to an equal spec.
pub fn emit_ring_file(spec: &RingSpec) -> String {
    let gens: Vec<serde_json::Value> = spec
        .generators()
        .iter()
        .map(|g| serde_json::Value::String(g.display(spec.vars())))
        .collect();
    let doc = serde_json::json!({
        "char": spec.char_p(),
        "ideal": gens,
        "vars": spec.vars(),
    });
    serde_json::to_string_pretty(&doc).expect("ring file serialization")
}
