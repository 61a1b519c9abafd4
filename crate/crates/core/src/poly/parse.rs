//! Text syntax for monomials and polynomials: variables `x0`..`xN` and `u`,
//! `^` for exponents, `*` for products, e.g. `x1^2 - x0*x2`.

use std::fmt::Write as _;

use num_traits::One;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Variable naming for an ambient ring: `x0..x{num_x-1}`, optionally
/// followed by a homogenizing variable `u` in the last slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarNames {
    pub num_x: usize,
    pub has_u: bool,
}

impl VarNames {
    pub fn new(num_x: usize) -> Self {
        VarNames { num_x, has_u: false }
    }

    pub fn with_u(num_x: usize) -> Self {
        VarNames { num_x, has_u: true }
    }

    pub fn nvars(&self) -> usize {
        self.num_x + usize::from(self.has_u)
    }

    pub fn name(&self, v: usize) -> String {
        if self.has_u && v == self.num_x {
            "u".to_string()
        } else {
            format!("x{v}")
        }
    }

    fn index(&self, name: &str) -> Result<usize> {
        if name == "u" && self.has_u {
            return Ok(self.num_x);
        }
        if let Some(idx) = name.strip_prefix('x') {
            if let Ok(i) = idx.parse::<usize>() {
                if i < self.num_x {
                    return Ok(i);
                }
            }
        }
        Err(Error::Parse(format!("unknown variable {name:?} (have {} x-variables)", self.num_x)))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = (0..m.nvars())
            .filter(|&v| m.exp(v) > 0)
            .map(|v| match m.exp(v) {
                1 => self.name(v),
                e => format!("{}^{e}", self.name(v)),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Terms printed from greatest to least under `order`.
    pub fn format_polynomial<F: Field>(&self, p: &Polynomial<F>, order: &MonomialOrder) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
            let neg = c.to_string().starts_with('-');
            let abs = if neg { -c } else { c };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(&m);
            if abs.is_one() {
                out.push_str(&mono);
            } else if m.is_one() {
                let _ = write!(out, "{abs}");
            } else {
                let _ = write!(out, "{abs}*{mono}");
            }
        }
        out
    }
}

fn parse_factor<F: Field>(names: &VarNames, text: &str, mono: &mut Vec<u32>, coeff: &mut F) -> Result<()> {
    let (base, power) = match text.split_once('^') {
        Some((b, p)) => {
            let p = p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad exponent in {text:?}: {e}")))?;
            (b.trim(), p)
        }
        None => (text.trim(), 1),
    };
    if base.is_empty() {
        return Err(Error::Parse(format!("empty factor in {text:?}")));
    }
    if base.chars().next().unwrap().is_ascii_digit() {
        let value = match base.split_once('/') {
            Some((n, d)) => {
                let n = n.parse::<i64>().map_err(|e| Error::Parse(e.to_string()))?;
                let d = d.parse::<i64>().map_err(|e| Error::Parse(e.to_string()))?;
                if d == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                F::from_i64(n) / F::from_i64(d)
            }
            None => F::from_i64(base.parse::<i64>().map_err(|e| Error::Parse(format!("bad number {base:?}: {e}")))?),
        };
        for _ in 0..power {
            *coeff = coeff.clone() * value.clone();
        }
    } else {
        mono[names.index(base)?] += power;
    }
    Ok(())
}

/// Parses a polynomial such as `x1^2 - x0*x2 + 3*u`.
pub fn parse_polynomial<F: Field>(text: &str, names: &VarNames) -> Result<Polynomial<F>> {
    let nvars = names.nvars();
    let mut poly = Polynomial::zero(nvars);
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    // Split into signed terms, keeping `^` exponents intact.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && current.is_empty() {
            if ch == '-' {
                negative = !negative;
            }
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {text:?}")));
    }
    terms.push((negative, current));
    for (neg, term) in terms {
        let mut mono = vec![0u32; nvars];
        let mut coeff = F::one();
        for factor in term.split('*') {
            parse_factor(names, factor, &mut mono, &mut coeff)?;
        }
        if neg {
            coeff = -coeff;
        }
        poly.add_term(Monomial::new(&mono), coeff);
    }
    Ok(poly)
}

/// Parses a comma-separated list of monomials, e.g. `x1^2,x1*x2,x2^2`.
pub fn parse_monomial_list(text: &str, names: &VarNames) -> Result<Vec<Monomial>> {
    text.split(',')
        .map(|part| {
            let p: Polynomial<crate::Q> = parse_polynomial(part, names)?;
            match p.as_monomial() {
                Some(m) if p.coefficient(m).is_one() => Ok(m.clone()),
                _ => Err(Error::Parse(format!("{part:?} is not a monomial"))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn parses_and_prints_round_trip() {
        let names = VarNames::new(3);
        let p: Polynomial<Q> = parse_polynomial("x1^2 - x0*x2", &names).unwrap();
        assert_eq!(p, Polynomial::binomial(Monomial::new(&[0, 2, 0]), Monomial::new(&[1, 0, 1])));
        let o = MonomialOrder::revlex(3);
        assert_eq!(names.format_polynomial(&p, &o), "x1^2 - x0*x2");
        let q: Polynomial<Q> = parse_polynomial("-2*x0 + 1/2 + x2^3", &names).unwrap();
        assert_eq!(names.format_polynomial(&q, &o), "x2^3 - 2*x0 + 1/2");
    }

    #[test]
    fn u_variable_and_errors() {
        let names = VarNames::with_u(2);
        let p: Polynomial<Q> = parse_polynomial("u*x1^2 - x0^3", &names).unwrap();
        assert_eq!(p.nvars(), 3);
        assert!(p.is_homogeneous());
        assert!(parse_polynomial::<Q>("x5", &names).is_err());
        assert!(parse_polynomial::<Q>("x1 -", &names).is_err());
        assert!(parse_polynomial::<Q>("x1^a", &names).is_err());
        assert!(parse_polynomial::<Q>("", &names).is_err());
    }

    #[test]
    fn monomial_lists() {
        let names = VarNames::new(3);
        let ms = parse_monomial_list("x1^2, x1*x2,x2^2", &names).unwrap();
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[1], Monomial::new(&[0, 1, 1]));
        assert!(parse_monomial_list("x1 - x2", &names).is_err());
        assert!(parse_monomial_list("2*x1", &names).is_err());
    }
}
