//! Parsing of linear combinations such as `3/2*X^2*Y - Z + 1/3`.

use num_traits::{One, Zero};

use crate::exact::{parse_rational, ScalarError, Q};

/// One summand: coefficient times an ordered (noncommutative) word of powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Q,
    pub factors: Vec<(String, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TextError {
    #[error("{0}")]
    Scalar(#[from] ScalarError),
    #[error("unexpected `{found}` at offset {pos} in `{input}`")]
    Unexpected { input: String, pos: usize, found: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

pub fn parse_combination(input: &str) -> Result<Vec<Term>, TextError> {
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0;
    let mut out = Vec::new();
    let err = |pos: usize, chars: &[char]| TextError::Unexpected {
        input: input.to_string(),
        pos,
        found: chars.get(pos).map_or("end of input".to_string(), |c| c.to_string()),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(err(pos, &chars));
    }
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == chars.len() {
            break;
        }
        let mut sign = Q::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !first {
            return Err(err(pos, &chars));
        }
        first = false;
        let mut coeff = sign;
        let mut factors: Vec<(String, u32)> = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos == chars.len() {
                return Err(err(pos, &chars));
            }
            let c = chars[pos];
            if c.is_ascii_digit() {
                let start = pos;
                while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                    pos += 1;
                }
                let lit: String = chars[start..pos].iter().collect();
                coeff *= parse_rational(&lit)?;
            } else if is_ident_start(c) {
                let start = pos;
                while pos < chars.len() && is_ident_char(chars[pos]) {
                    pos += 1;
                }
                let name: String = chars[start..pos].iter().collect();
                let mut power = 1u32;
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if s == pos {
                        return Err(err(pos, &chars));
                    }
                    power = chars[s..pos].iter().collect::<String>().parse().map_err(|_| err(s, &chars))?;
                }
                if power > 0 {
                    factors.push((name, power));
                }
            } else {
                return Err(err(pos, &chars));
            }
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if !coeff.is_zero() {
            out.push(Term { coeff, factors });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn parses_terms() {
        let t = parse_combination("3/2*X^2*Y - Z + 1/3").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].coeff, q(3, 2));
        assert_eq!(t[0].factors, vec![("X".into(), 2), ("Y".into(), 1)]);
        assert_eq!(t[1].coeff, qi(-1));
        assert!(t[2].factors.is_empty());
        assert_eq!(parse_combination("-Y11").unwrap()[0].factors[0].0, "Y11");
        assert!(parse_combination("X +").is_err());
        assert!(parse_combination("1/0*X").is_err());
    }
}
