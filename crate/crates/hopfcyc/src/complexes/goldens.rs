//! Named cochains on the four-dimensional SAYD over H1S-cop.

use num_traits::One;

use super::cyclic::{HChain, HopfCyclic};
use super::mixed::{sum, Bicomplex, TotChain};
use crate::exact::{axpy, q, qi, Q};

fn add(parts: Vec<HChain>) -> HChain {
    let mut out = HChain::new();
    for p in &parts {
        axpy(&mut out, &Q::one(), p);
    }
    out
}

/// The degree-one cyclic cocycle.
pub fn c_odd(c: &HopfCyclic) -> HChain {
    add(vec![
        c.term(-Q::one(), "1", &["d1"]),
        c.term(-Q::one(), "RX", &["d1*X"]),
        c.term(-Q::one(), "RY", &["X + d1*Y"]),
        c.term(qi(-2), "RZ", &["Y"]),
    ])
}

/// The degree-two cyclic cocycle.
pub fn c_even(c: &HopfCyclic) -> HChain {
    let t = |k: Q, v: &str, a: &str, b: &str| c.term(k, v, &[a, b]);
    let one = Q::one;
    add(vec![
        t(one(), "1", "X", "Y"),
        t(-one(), "1", "Y", "X"),
        t(one(), "1", "Y", "d1*Y"),
        t(-one(), "RX", "X*Y", "X"),
        t(-one(), "RX", "Y^2", "d1*X"),
        t(-one(), "RX", "Y", "X^2"),
        t(one(), "RY", "X*Y", "Y"),
        t(one(), "RY", "Y^2", "d1*Y"),
        t(one(), "RY", "X", "Y^2"),
        t(one(), "RY", "Y", "d1*Y^2"),
        t(-one(), "RY", "Y", "X"),
        t(-one(), "RX", "X*Y^2", "d1"),
        t(q(-1, 3), "RX", "Y^3", "d1^2"),
        t(q(1, 3), "RY", "Y^3", "d1"),
        t(q(-1, 4), "RX", "Y^2", "d1^2"),
        t(q(-1, 2), "RY", "Y^2", "d1"),
    ])
}

/// c' in bidegree (1, 0) and c''' in bidegree (0, 1).
pub fn total_odd(t: &Bicomplex) -> (TotChain, TotChain) {
    let c1 = t.term(Q::one(), "1", &["d1"], &[]).expect("golden");
    let c3 = sum(&[
        t.term(Q::one(), "RY", &[], &["X"]).expect("golden"),
        t.term(qi(2), "RZ", &[], &["Y"]).expect("golden"),
    ]);
    (c1, c3)
}

/// c in bidegree (0, 2) and c'' in bidegree (1, 1).
pub fn total_even(t: &Bicomplex) -> (TotChain, TotChain) {
    let one = Q::one;
    let g = |k: Q, v: &str, f: &[&str], u: &[&str]| t.term(k, v, f, u).expect("golden");
    let c = sum(&[
        g(one(), "1", &[], &["X", "Y"]),
        g(-one(), "1", &[], &["Y", "X"]),
        g(-one(), "RX", &[], &["X*Y", "X"]),
        g(-one(), "RX", &[], &["Y", "X^2"]),
        g(one(), "RY", &[], &["X*Y", "Y"]),
        g(one(), "RY", &[], &["X", "Y^2"]),
        g(-one(), "RY", &[], &["Y", "X"]),
    ]);
    let c2 = sum(&[
        g(-one(), "RX", &["d1"], &["X*Y^2"]),
        g(q(2, 3), "RX", &["d1^2"], &["Y^3"]),
        g(q(1, 3), "RY", &["d1"], &["Y^3"]),
        g(q(-1, 4), "RX", &["d1^2"], &["Y^2"]),
        g(q(-1, 2), "RY", &["d1"], &["Y^2"]),
    ]);
    (c, c2)
}
