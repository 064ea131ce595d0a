//! Canonical text form of functions: `(c)(λ-poly)*z1^2*z2*w/F^k` terms joined by ` + `.

use std::sync::Arc;

use super::{LambdaPoly, LocFn, Monomial, RingCtx, RingError, Scalar, SuperFn, ZPoly};

pub fn var_name(n: usize, i: usize) -> String {
    if n == 1 {
        "z".to_string()
    } else {
        format!("z{}", i + 1)
    }
}

fn format_term(n: usize, m: &Monomial, c: &LambdaPoly, odd: bool, k: u32) -> String {
    let (lead, monic) = c.split_content().expect("stored coefficients are nonzero");
    let mut s = format!("({lead})");
    if !monic.is_constant() {
        s.push_str(&format!("({monic})"));
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("*{}", var_name(n, i))),
            _ => s.push_str(&format!("*{}^{e}", var_name(n, i))),
        }
    }
    if odd {
        s.push_str("*w");
    }
    match k {
        0 => {}
        1 => s.push_str("/F"),
        _ => s.push_str(&format!("/F^{k}")),
    }
    s
}

/// Terms of `f` in canonical order: even part then odd part, monomials descending.
pub fn superfn_terms(f: &SuperFn) -> Vec<String> {
    let n = f.ctx().n();
    let mut out = Vec::new();
    for (loc, odd) in [(f.even(), false), (f.odd(), true)] {
        for (m, c) in loc.num().terms().rev() {
            out.push(format_term(n, m, c, odd, loc.denom_exp()));
        }
    }
    out
}

pub fn format_superfn_terms(f: &SuperFn) -> String {
    let terms = superfn_terms(f);
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Split on `sep` outside parentheses.
pub fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

/// Read a parenthesised group at the start of `s`; returns (inside, rest).
fn take_group(s: &str) -> Option<(&str, &str)> {
    if !s.starts_with('(') {
        return None;
    }
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&s[1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_var(n: usize, name: &str) -> Result<usize, RingError> {
    let bad = || RingError::Parse(format!("unknown variable `{name}`"));
    if n == 1 && name == "z" {
        return Ok(0);
    }
    let idx: usize = name.strip_prefix('z').ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if idx == 0 || idx > n {
        return Err(bad());
    }
    Ok(idx - 1)
}

fn parse_term(ctx: &Arc<RingCtx>, term: &str) -> Result<SuperFn, RingError> {
    let n = ctx.n();
    let bad = || RingError::Parse(format!("bad term `{term}`"));
    let (lead, rest) = take_group(term.trim()).ok_or_else(bad)?;
    let lead: Scalar = lead.parse()?;
    let (lpoly, rest) = match take_group(rest) {
        Some((inner, tail)) => (inner.parse::<LambdaPoly>()?, tail),
        None => (LambdaPoly::one(), rest),
    };
    let (factors, k) = match rest.split_once('/') {
        Some((f, d)) => {
            let k = match d {
                "F" => 1,
                _ => d.strip_prefix("F^").and_then(|e| e.parse().ok()).ok_or_else(bad)?,
            };
            (f, k)
        }
        None => (rest, 0),
    };
    let mut exps = vec![0u16; n];
    let mut odd = false;
    for factor in factors.split('*').skip(1) {
        if factor == "w" {
            odd = true;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((v, e)) => (v, e.parse::<u16>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        exps[parse_var(n, name)?] += e;
    }
    if !factors.is_empty() && !factors.starts_with('*') {
        return Err(bad());
    }
    let poly = ZPoly::monomial(Monomial::from_exponents(&exps), lpoly.scale(&lead));
    let loc = LocFn::new(ctx, poly, k);
    Ok(if odd { SuperFn::from_odd(loc) } else { SuperFn::from_even(loc) })
}

pub fn parse_superfn(ctx: &Arc<RingCtx>, s: &str) -> Result<SuperFn, RingError> {
    let s = s.trim();
    let mut acc = SuperFn::zero(ctx);
    if s == "0" {
        return Ok(acc);
    }
    for term in split_top_level(s, " + ") {
        acc = &acc + &parse_term(ctx, term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det2() -> Arc<RingCtx> {
        let z = |i| ZPoly::var(4, i);
        RingCtx::new(4, 2, &(&z(0) * &z(3)) - &(&z(1) * &z(2)))
    }

    #[test]
    fn round_trip() {
        let ctx = det2();
        let lam = LambdaPoly::from_coeffs(vec![Scalar::frac(-1, 2), Scalar::from_int(3)]);
        let f = &SuperFn::var(&ctx, 0).scale_lambda(&lam) + &SuperFn::w_inv(&ctx).scale(&Scalar::i());
        let text = format_superfn_terms(&f);
        assert_eq!(text, "(3)(-1/6 + L)*z1 + (1i)*w/F");
        assert_eq!(parse_superfn(&ctx, &text).unwrap(), f);
    }

    #[test]
    fn single_variable_names() {
        let ctx = RingCtx::new(1, 1, ZPoly::var(1, 0));
        let f = SuperFn::var(&ctx, 0).scale(&Scalar::from_int(-1));
        assert_eq!(format_superfn_terms(&f), "(-1)*z");
        assert!(parse_superfn(&ctx, "(1)*z2").is_err());
    }
}
