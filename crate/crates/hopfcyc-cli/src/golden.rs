use std::sync::Arc;

use hopfcyc::cohomology::{e1_hopf_truncated, e1_lie_periodic};
use hopfcyc::complexes::cyclic::{HChain, HopfCyclic};
use hopfcyc::complexes::goldens::{c_even, c_odd, total_even, total_odd};
use hopfcyc::complexes::mixed::{neg, sum, Bicomplex, Direction};
use hopfcyc::complexes::weight::WeightOperator;
use hopfcyc::complexes::weil::WeilEmbedding;
use hopfcyc::exact::qi;
use hopfcyc::hopf::h1s_cop;
use hopfcyc::lie::sl2_xyz;
use hopfcyc::sayd::{koszul_truncated, schwarzian_4dim, InducedSayd};
use serde_json::{json, Value};

pub struct Golden {
    pub name: &'static str,
    pub min_degree: usize,
    pub about: &'static str,
}

pub const GOLDENS: &[Golden] = &[
    Golden { name: "mpi-h1s", min_degree: 2, about: "canonical modular pair in involution of H1S-cop: sigma = 1, delta(X) = 0, delta(Y) = 1" },
    Golden { name: "yd-4dim", min_degree: 3, about: "the 4-dimensional module over H1S-cop: module, comodule, YD, AYD and stability checks" },
    Golden { name: "c-odd", min_degree: 3, about: "b and B annihilate the odd Schwarzian cocycle in C(H1S-cop, V)" },
    Golden { name: "c-even", min_degree: 4, about: "b and B annihilate the even Schwarzian cocycle in C(H1S-cop, V)" },
    Golden { name: "total-odd", min_degree: 3, about: "c' + c''' is a cocycle of the mixed total complex; vertical and horizontal B give R^Z and -R^Z" },
    Golden { name: "total-even", min_degree: 4, about: "c + c'' is a cocycle of the mixed total complex" },
    Golden { name: "aw-psi", min_degree: 4, about: "Psi after Alexander-Whitney carries the total cocycles to the odd and even Schwarzian cocycles" },
    Golden { name: "weights", min_degree: 4, about: "both Schwarzian cocycles are homogeneous of weight 1 for the weight operator" },
    Golden { name: "e1-h1s", min_degree: 2, about: "E1 page of the coefficient filtration: two classes for W(sl2, V) and no graded pieces above 1 for H1S-cop" },
    Golden { name: "weil-embed-n1", min_degree: 0, about: "the Weil embedding W(pgl(1)) into W(gl(1), V) commutes with the differentials" },
];

pub fn find(name: &str) -> Option<&'static Golden> {
    GOLDENS.iter().find(|g| g.name == name)
}

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "ok": self.ok, "detail": self.detail })
    }
}

fn schwarzian(max_degree: usize) -> Result<InducedSayd, String> {
    schwarzian_4dim(Arc::new(h1s_cop(max_degree))).map_err(|e| e.to_string())
}

fn zero_check(c: &HopfCyclic, name: &str, x: &HChain, f: impl Fn(&HChain) -> Result<HChain, String>) -> Check {
    match f(x) {
        Ok(y) if y.is_empty() => Check::new(name, true, "0"),
        Ok(y) => Check::new(name, false, c.format(&y)),
        Err(e) => Check::new(name, false, e),
    }
}

fn cocycle_checks(s: &InducedSayd, which: &str, x: &HChain) -> Vec<Check> {
    let c = HopfCyclic::new(&s.module);
    vec![
        zero_check(&c, &format!("b({which}) = 0"), x, |x| c.b_checked(x).map_err(|e| e.to_string())),
        zero_check(&c, &format!("B({which}) = 0"), x, |x| c.connes_b_checked(x).map_err(|e| e.to_string())),
    ]
}

pub fn run(name: &str, max_degree: usize) -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    match name {
        "mpi-h1s" => {
            let h = h1s_cop(max_degree);
            let r = h.canonical_mpi();
            out.push(Check::new("sigma = 1", r.sigma == "1", r.sigma.clone()));
            for (g, want) in [("X", 0), ("Y", 1)] {
                let got = r.delta.iter().find(|(n, _)| n == g).map(|(_, v)| v.clone());
                out.push(Check::new(&format!("delta({g}) = {want}"), got == Some(qi(want)), format!("{got:?}")));
            }
            out.push(Check::new("S_delta^2 = id on generators", r.ok(), r.failures.join("; ")));
        }
        "yd-4dim" => {
            let s = schwarzian(max_degree)?;
            for (n, r) in s.module.check_all(3) {
                out.push(Check::new(n, r.is_ok(), r.err().map(|e| e.to_string()).unwrap_or_default()));
            }
        }
        "c-odd" => {
            let s = schwarzian(max_degree)?;
            let x = c_odd(&HopfCyclic::new(&s.module));
            out.extend(cocycle_checks(&s, "c^odd", &x));
        }
        "c-even" => {
            let s = schwarzian(max_degree)?;
            let x = c_even(&HopfCyclic::new(&s.module));
            out.extend(cocycle_checks(&s, "c^even", &x));
        }
        "total-odd" | "total-even" => {
            let s = schwarzian(max_degree)?;
            let t = Bicomplex::new(&s.module);
            let (a, b) = if name == "total-odd" { total_odd(&t) } else { total_even(&t) };
            let x = sum(&[a.clone(), b.clone()]);
            let label = if name == "total-odd" { "c' + c'''" } else { "c + c''" };
            let bt = t.b_total(&x);
            out.push(Check::new(&format!("b_T({label}) = 0"), bt.is_empty(), t.format(&bt)));
            let ct = t.connes_total(&x);
            out.push(Check::new(&format!("B_T({label}) = 0"), ct.is_empty(), t.format(&ct)));
            if name == "total-odd" {
                let rz = t.term(qi(1), "RZ", &[], &[]).map_err(|e| e.to_string())?;
                let up = t.connes(Direction::F, &a);
                out.push(Check::new("vertical B(c') = R^Z", up == rz, t.format(&up)));
                let right = t.connes(Direction::U, &b);
                out.push(Check::new("horizontal B(c''') = -R^Z", right == neg(&rz), t.format(&right)));
            }
        }
        "aw-psi" => {
            let s = schwarzian(max_degree)?;
            let t = Bicomplex::new(&s.module);
            let c = HopfCyclic::new(&s.module);
            for (label, (a, b), want) in [("odd", total_odd(&t), c_odd(&c)), ("even", total_even(&t), c_even(&c))] {
                let aw = sum(&[t.alexander_whitney(&a), t.alexander_whitney(&b)]);
                match t.psi(&aw) {
                    Ok(p) => out.push(Check::new(&format!("Psi(AW(total {label})) = c^{label}"), p == want, c.format(&p))),
                    Err(e) => out.push(Check::new(&format!("Psi(AW(total {label})) = c^{label}"), false, e.to_string())),
                }
            }
        }
        "weights" => {
            let s = schwarzian(max_degree)?;
            let c = HopfCyclic::new(&s.module);
            let w = WeightOperator::new(&s.module, 1);
            for (label, x) in [("c^odd", c_odd(&c)), ("c^even", c_even(&c))] {
                match w.weight_decompose(&x) {
                    Ok(d) => {
                        let ws: Vec<String> = d.keys().map(|k| k.to_string()).collect();
                        out.push(Check::new(&format!("{label} has weight 1 only"), ws == ["1"], ws.join(", ")));
                    }
                    Err(e) => out.push(Check::new(&format!("{label} has weight 1 only"), false, e.to_string())),
                }
            }
        }
        "e1-h1s" => {
            let g = sl2_xyz();
            let v = koszul_truncated(&g);
            let f = v.filtration().map_err(|e| e.to_string())?;
            let p = e1_lie_periodic(&g, &v, &f.levels, 1).map_err(|e| e.to_string())?;
            out.push(Check::new("E1^0 of W(sl2, V) vanishes", p[0] == (0, 0), format!("{:?}", p[0])));
            out.push(Check::new("E1^1 of W(sl2, V) is H(sl2) with two classes", p[1] == (1, 1), format!("{:?}", p[1])));
            let s = schwarzian(max_degree)?;
            let levels = s.base.filtration().map_err(|e| e.to_string())?.levels;
            let monos = s.module.hopf.monomials(max_degree as u32).len();
            match e1_hopf_truncated(&s.module, &levels, monos, 4, 3) {
                Ok(e) => {
                    let ok = (2..=4).all(|j| e.cochain_dims[j].iter().all(|&d| d == 0));
                    out.push(Check::new("E1^j of C(H1S-cop, V) vanishes for j >= 2", ok, format!("graded dims {:?}", e.graded_dims)));
                }
                Err(e) => out.push(Check::new("E1^j of C(H1S-cop, V) vanishes for j >= 2", false, e.to_string())),
            }
        }
        "weil-embed-n1" => {
            let e = WeilEmbedding::new(1);
            let top = e.pgl.dim();
            match e.verify(top) {
                Ok(n) => out.push(Check::new("square commutes on W(pgl(1))", true, format!("{n} basis elements"))),
                Err(bad) => out.push(Check::new("square commutes on W(pgl(1))", false, format!("{} residuals", bad.len()))),
            }
        }
        _ => return Err(format!("unknown golden `{name}`")),
    }
    Ok(out)
}
