//! Text form of cyclotomic values: sums of `c*E(n)^k` where `E(n)` denotes
//! exp(2i*pi/n) and `c` is a rational `p/q`.  Whitespace-insensitive.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Cyclotomic, Rational};

/// Renders a value as a literal, e.g. `-1/3*E(12)^1 + 2*E(3)^2`.
pub fn format_literal(v: &Cyclotomic) -> String {
    let terms = v.sparse_coeffs();
    if terms.is_empty() {
        return "0".to_string();
    }
    let n = v.conductor();
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = format_rational(&mag);
        if *e == 0 {
            out.push_str(&coeff);
        } else if mag.is_one() {
            out.push_str(&format!("E({n})^{e}"));
        } else {
            out.push_str(&format!("{coeff}*E({n})^{e}"));
        }
    }
    out
}

fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid cyclotomic literal at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Parses a literal back into a value.  The conductor of the result is the
/// lcm of the conductors of the terms (1 for plain rationals).
pub fn parse_literal(input: &str) -> Result<Cyclotomic, ParseError> {
    let s: Vec<u8> = input.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseError { pos: 0, msg: "empty input".into() });
    }
    let mut pos = 0;
    let mut acc = Cyclotomic::zero(1);
    let mut sign = BigInt::one();
    // Optional leading sign.
    if s[0] == b'+' || s[0] == b'-' {
        if s[0] == b'-' {
            sign = -sign;
        }
        pos = 1;
    }
    loop {
        let (term, next) = parse_term(&s, pos)?;
        acc = acc.add(&term.scale(&Rational::from_integer(sign.clone())));
        pos = next;
        if pos == s.len() {
            return Ok(acc);
        }
        sign = match s[pos] {
            b'+' => BigInt::one(),
            b'-' => -BigInt::one(),
            c => {
                return Err(ParseError { pos, msg: format!("expected + or -, found {:?}", c as char) })
            }
        };
        pos += 1;
    }
}

fn parse_term(s: &[u8], mut pos: usize) -> Result<(Cyclotomic, usize), ParseError> {
    let mut coeff = Rational::one();
    let mut saw_coeff = false;
    if pos < s.len() && s[pos].is_ascii_digit() {
        let (num, p) = parse_uint(s, pos)?;
        pos = p;
        if pos < s.len() && s[pos] == b'/' {
            let (den, p) = parse_uint(s, pos + 1)?;
            if den.is_zero() {
                return Err(ParseError { pos, msg: "zero denominator".into() });
            }
            pos = p;
            coeff = Rational::new(num, den);
        } else {
            coeff = Rational::from_integer(num);
        }
        saw_coeff = true;
    }
    if pos < s.len() && s[pos] == b'*' {
        pos += 1;
        if !(pos < s.len() && s[pos] == b'E') {
            return Err(ParseError { pos, msg: "expected E(n) after '*'".into() });
        }
    }
    if pos < s.len() && s[pos] == b'E' {
        pos += 1;
        if !(pos < s.len() && s[pos] == b'(') {
            return Err(ParseError { pos, msg: "expected '(' after E".into() });
        }
        let (n, p) = parse_uint(s, pos + 1)?;
        pos = p;
        if !(pos < s.len() && s[pos] == b')') {
            return Err(ParseError { pos, msg: "expected ')'".into() });
        }
        pos += 1;
        let n: u32 = n
            .try_into()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| ParseError { pos, msg: "root index out of range".into() })?;
        let mut k: i64 = 1;
        if pos < s.len() && s[pos] == b'^' {
            let mut kpos = pos + 1;
            let mut ksign = 1i64;
            if kpos < s.len() && s[kpos] == b'-' {
                ksign = -1;
                kpos += 1;
            }
            let (kv, p) = parse_uint(s, kpos)?;
            pos = p;
            k = ksign
                * i64::try_from(kv).map_err(|_| ParseError { pos, msg: "exponent too large".into() })?;
        }
        let root = Cyclotomic::root_of_unity(n, k);
        Ok((root.scale(&coeff), pos))
    } else if saw_coeff {
        Ok((Cyclotomic::from_rational(coeff), pos))
    } else {
        Err(ParseError { pos, msg: "expected a rational or E(n) term".into() })
    }
}

fn parse_uint(s: &[u8], mut pos: usize) -> Result<(BigInt, usize), ParseError> {
    let start = pos;
    while pos < s.len() && s[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err(ParseError { pos, msg: "expected digits".into() });
    }
    let txt = std::str::from_utf8(&s[start..pos]).unwrap();
    Ok((txt.parse().unwrap(), pos))
}
