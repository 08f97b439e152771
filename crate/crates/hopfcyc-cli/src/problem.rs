//! Problem files: bracketed sections of `key = value` lines.
//!
//! ```text
//! [lie]
//! basis = X, Y, Z
//! [Y, X] = X
//! [Z, X] = Y
//! bracket Z, Y = Z
//!
//! [module]
//! builtin = sl2-koszul
//! ```

use std::collections::BTreeMap;
use std::fmt;

use hopfcyc::exact::{parse_rational, Mat, Q};
use hopfcyc::lie::{builtin_lie, BuiltinLie, LieAlgebra, LieVec, MatchedPair};
use hopfcyc::sayd::{builtin_sayd, SaydData};
use hopfcyc::text::parse_combination;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError { line, message: message.into() })
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Sections {
    pub sections: BTreeMap<String, Vec<Entry>>,
}

const SECTIONS: &[&str] = &["lie", "matched-pair", "hopf", "module", "coaction", "task"];

pub fn split_sections(text: &str) -> Result<Sections, InputError> {
    let mut out = Sections::default();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.split('#').next().unwrap_or("").trim();
        if s.is_empty() {
            continue;
        }
        if s.starts_with('[') && s.ends_with(']') && !s.contains('=') {
            let name = s[1..s.len() - 1].trim().to_string();
            if !SECTIONS.contains(&name.as_str()) {
                return err(line, format!("unknown section [{name}]"));
            }
            if out.sections.contains_key(&name) {
                return err(line, format!("duplicate section [{name}]"));
            }
            out.sections.insert(name.clone(), Vec::new());
            current = Some(name);
            continue;
        }
        let Some(sec) = &current else {
            return err(line, "entry outside of any section");
        };
        let Some((k, v)) = s.split_once('=') else {
            return err(line, format!("expected `key = value`, found `{s}`"));
        };
        out.sections.get_mut(sec).expect("section exists").push(Entry {
            key: k.trim().to_string(),
            value: v.trim().to_string(),
            line,
        });
    }
    Ok(out)
}

pub fn parse_list(v: &str) -> Vec<String> {
    v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_q(s: &str, line: usize) -> Result<Q, InputError> {
    parse_rational(s.trim().trim_matches('"')).map_err(|e| InputError { line, message: e.to_string() })
}

/// `[[a, b], [c, d]]` with rational entries.
pub fn parse_matrix(v: &str, line: usize) -> Result<Vec<Vec<Q>>, InputError> {
    let s = v.trim();
    if !(s.starts_with('[') && s.ends_with(']')) {
        return err(line, format!("expected a matrix literal, found `{s}`"));
    }
    let inner = s[1..s.len() - 1].trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut rest = inner;
    loop {
        let rest_t = rest.trim_start();
        if !rest_t.starts_with('[') {
            return err(line, format!("expected `[` at `{rest_t}`"));
        }
        let Some(close) = rest_t.find(']') else {
            return err(line, "unterminated matrix row");
        };
        let row: Result<Vec<Q>, InputError> = rest_t[1..close].split(',').map(|e| parse_q(e, line)).collect();
        rows.push(row?);
        rest = rest_t[close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        let Some(r) = rest.strip_prefix(',') else {
            return err(line, format!("expected `,` between rows at `{rest}`"));
        };
        rest = r;
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return err(line, "ragged matrix");
    }
    Ok(rows)
}

/// A linear combination of basis names with no constant term.
pub fn parse_lie_vec(v: &str, basis: &[String], line: usize) -> Result<LieVec, InputError> {
    let mut out = LieVec::new();
    if v.trim() == "0" {
        return Ok(out);
    }
    let terms = parse_combination(v).map_err(|e| InputError { line, message: e.to_string() })?;
    for t in terms {
        let [(name, 1)] = t.factors.as_slice() else {
            return err(line, format!("`{v}` is not a linear combination of basis elements"));
        };
        let Some(i) = basis.iter().position(|b| b == name) else {
            return err(line, format!("unknown basis element `{name}`"));
        };
        let c = out.entry(i).or_default();
        *c += t.coeff;
    }
    out.retain(|_, c| *c != hopfcyc::exact::qi(0));
    Ok(out)
}

fn parse_bracket_key(k: &str, basis: &[String], line: usize) -> Result<Option<(usize, usize)>, InputError> {
    let k = k.trim();
    let inner = if let Some(rest) = k.strip_prefix("bracket ") {
        rest
    } else if k.starts_with('[') && k.ends_with(']') {
        &k[1..k.len() - 1]
    } else {
        return Ok(None);
    };
    let parts = parse_list(inner);
    let [a, b] = parts.as_slice() else {
        return err(line, format!("bracket `{k}` needs two arguments"));
    };
    let find = |n: &String| basis.iter().position(|x| x == n).ok_or_else(|| InputError { line, message: format!("unknown basis element `{n}`") });
    Ok(Some((find(a)?, find(b)?)))
}

#[derive(Debug, Clone)]
pub struct HopfSpec {
    pub name: String,
    pub max_degree: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Problem {
    pub lie: Option<LieAlgebra>,
    pub pair: Option<MatchedPair>,
    pub hopf: Option<HopfSpec>,
    pub module: Option<SaydData>,
    pub task: BTreeMap<String, String>,
}

fn single<'a>(entries: &'a [Entry], key: &str) -> Option<&'a Entry> {
    entries.iter().find(|e| e.key == key)
}

fn parse_lie_section(entries: &[Entry]) -> Result<LieAlgebra, InputError> {
    if let Some(b) = single(entries, "builtin") {
        return match builtin_lie(&b.value, None) {
            Ok(BuiltinLie::Algebra(g)) => Ok(g),
            Ok(BuiltinLie::Pair(p)) => Ok(p.double_crossed_sum()),
            Err(e) => err(b.line, e.to_string()),
        };
    }
    let Some(basis_e) = single(entries, "basis") else {
        return err(entries.first().map_or(0, |e| e.line), "[lie] needs `builtin` or `basis`");
    };
    let basis = parse_list(&basis_e.value);
    let name = single(entries, "name").map_or("g".to_string(), |e| e.value.clone());
    let mut given: BTreeMap<(usize, usize), LieVec> = BTreeMap::new();
    for e in entries {
        match e.key.as_str() {
            "basis" | "name" => {}
            k => match parse_bracket_key(k, &basis, e.line)? {
                Some(ij) => {
                    given.insert(ij, parse_lie_vec(&e.value, &basis, e.line)?);
                }
                None => return err(e.line, format!("unknown key `{k}` in [lie]")),
            },
        }
    }
    // brackets are stored as supplied; a missing opposite order is filled by antisymmetry
    let mut consts = Vec::new();
    for (&(i, j), v) in &given {
        for (&k, c) in v {
            consts.push(((i, j, k), c.clone()));
            if !given.contains_key(&(j, i)) && i != j {
                consts.push(((j, i, k), -c.clone()));
            }
        }
    }
    Ok(LieAlgebra::from_constants(&name, basis, &consts))
}

fn lie_by_name(v: &str, line: usize) -> Result<LieAlgebra, InputError> {
    if let Some(rest) = v.strip_prefix("abelian:") {
        return Ok(LieAlgebra::abelian("abelian", parse_list(rest)));
    }
    match builtin_lie(v, None) {
        Ok(BuiltinLie::Algebra(g)) => Ok(g),
        Ok(BuiltinLie::Pair(_)) => err(line, format!("`{v}` is a matched pair, not a Lie algebra")),
        Err(e) => err(line, e.to_string()),
    }
}

fn parse_pair_section(entries: &[Entry]) -> Result<MatchedPair, InputError> {
    if let Some(b) = single(entries, "builtin") {
        return match builtin_lie(&b.value, None) {
            Ok(BuiltinLie::Pair(p)) => Ok(p),
            Ok(BuiltinLie::Algebra(_)) => err(b.line, format!("`{}` is not a matched pair", b.value)),
            Err(e) => err(b.line, e.to_string()),
        };
    }
    let (Some(g1), Some(g2)) = (single(entries, "g1"), single(entries, "g2")) else {
        return err(entries.first().map_or(0, |e| e.line), "[matched-pair] needs `builtin` or both `g1` and `g2`");
    };
    let g1 = lie_by_name(&g1.value, g1.line)?;
    let g2 = lie_by_name(&g2.value, g2.line)?;
    let mut p = MatchedPair::new(g1.clone(), g2.clone());
    for e in entries {
        let words: Vec<&str> = e.key.split_whitespace().collect();
        match words.as_slice() {
            ["g1"] | ["g2"] => {}
            [side @ ("left" | "right"), xi, x] => {
                let xi_i = g2.basis.iter().position(|b| b == xi).ok_or_else(|| InputError { line: e.line, message: format!("unknown g2 element `{xi}`") })?;
                let x_i = g1.basis.iter().position(|b| b == x).ok_or_else(|| InputError { line: e.line, message: format!("unknown g1 element `{x}`") })?;
                if *side == "left" {
                    p.set_left(xi_i, x_i, parse_lie_vec(&e.value, &g1.basis, e.line)?);
                } else {
                    p.set_right(xi_i, x_i, parse_lie_vec(&e.value, &g2.basis, e.line)?);
                }
            }
            _ => return err(e.line, format!("unknown key `{}` in [matched-pair]", e.key)),
        }
    }
    Ok(p)
}

fn matrices_for(entries: &[Entry], lie: &LieAlgebra, dim: usize, what: &str) -> Result<Vec<Mat>, InputError> {
    let mut out = vec![Mat::zeros(dim, dim); lie.dim()];
    for e in entries {
        if e.key == "basis" || e.key == "builtin" {
            continue;
        }
        let Some(j) = lie.basis.iter().position(|b| *b == e.key) else {
            return err(e.line, format!("`{}` is not a basis element of {}", e.key, lie.name));
        };
        let rows = parse_matrix(&e.value, e.line)?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return err(e.line, format!("{what} matrix for `{}` must be {dim}×{dim}", e.key));
        }
        out[j] = Mat::from_rows(rows);
    }
    Ok(out)
}

pub fn parse_problem(text: &str) -> Result<Problem, InputError> {
    let s = split_sections(text)?;
    let mut p = Problem::default();
    if let Some(e) = s.sections.get("matched-pair") {
        p.pair = Some(parse_pair_section(e)?);
    }
    if let Some(e) = s.sections.get("lie") {
        p.lie = Some(parse_lie_section(e)?);
    } else if let Some(mp) = &p.pair {
        p.lie = Some(mp.double_crossed_sum());
    }
    if let Some(e) = s.sections.get("hopf") {
        let Some(b) = single(e, "builtin") else {
            return err(e.first().map_or(0, |x| x.line), "[hopf] needs `builtin`");
        };
        let max_degree = match single(e, "max-degree") {
            Some(m) => Some(m.value.parse().map_err(|_| InputError { line: m.line, message: format!("bad max-degree `{}`", m.value) })?),
            None => None,
        };
        p.hopf = Some(HopfSpec { name: b.value.clone(), max_degree });
    }
    if let Some(e) = s.sections.get("module") {
        if let Some(b) = single(e, "builtin") {
            let (v, g) = builtin_sayd(&b.value, None).map_err(|x| InputError { line: b.line, message: x.to_string() })?;
            if p.lie.is_none() {
                p.lie = Some(g);
            }
            p.module = Some(v);
        } else {
            let Some(lie) = &p.lie else {
                return err(e.first().map_or(0, |x| x.line), "[module] needs a [lie] section");
            };
            let Some(be) = single(e, "basis") else {
                return err(e.first().map_or(0, |x| x.line), "[module] needs `builtin` or `basis`");
            };
            let basis = parse_list(&be.value);
            let action = matrices_for(e, lie, basis.len(), "action")?;
            let d = basis.len();
            p.module = Some(SaydData { name: "V".into(), basis, action, coaction: vec![Mat::zeros(d, d); lie.dim()] });
        }
    }
    if let Some(e) = s.sections.get("coaction") {
        let (Some(lie), Some(v)) = (&p.lie, &mut p.module) else {
            return err(e.first().map_or(0, |x| x.line), "[coaction] needs [lie] and [module]");
        };
        v.coaction = matrices_for(e, lie, v.dim(), "coaction")?;
    }
    if let Some(e) = s.sections.get("task") {
        for x in e {
            p.task.insert(x.key.clone(), x.value.clone());
        }
    }
    if let (Some(lie), Some(v)) = (&p.lie, &p.module) {
        if v.action.len() != lie.dim() {
            return err(0, format!("module {} is not over {}", v.name, lie.name));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_and_brackets() {
        let p = parse_problem("[lie]\nbasis = X, Y, Z\n[Y, X] = X\n[Z, X] = Y\n[Z, Y] = Z\n").unwrap();
        let g = p.lie.unwrap();
        assert!(g.validate().is_ok());
        assert_eq!(g.format_vec(g.bracket_basis(0, 1)), "-X");
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("[[0, 1/2], [-3, 0]]", 1).unwrap();
        assert_eq!(m[0][1], Q::new(1.into(), 2.into()));
        assert!(parse_matrix("[[1/0]]", 4).unwrap_err().message.contains("zero denominator"));
        assert!(parse_matrix("[[1, 2], [3]]", 1).is_err());
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_problem("[lie]\nbasis = X\n[X, W] = X\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_problem("x = 1\n").is_err());
        assert!(parse_problem("[nonsense]\n").is_err());
    }
}
