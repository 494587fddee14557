//! Acceptance run: one line per criterion, all comparisons exact.
//!
//! Criteria 12 (closed-form part) and 13 are known to fail; the reasons are in
//! the README. They are printed as FAIL and only abort the run if they start
//! failing in a different way.

mod common;

use std::collections::HashMap;
use std::time::Instant;

use wreath_macdonald::algebra::{CycloScalar, QTRational, RatMatrix, Subst};
use wreath_macdonald::combinat::{total_order, EPartition, MShape, Order, Sign, SymbolType, TieBreak};
use wreath_macdonald::macdonald::{
    build_pq, check_conjecture_a, diag_block_direct, matrix_b, matrix_h, verify_adjoint, verify_commutation,
    verify_f3_closed_form, verify_family_action, verify_order_independence, verify_shift_stability, verify_theorem36,
    MacdonaldBasis,
};
use wreath_macdonald::report::Report;
use wreath_macdonald::symfun::{g_function, hall_littlewood_q, verify_duality, verify_kernel};

const EXPECTED_RED: [u32; 2] = [12, 13];

fn order(n: u32, shape: &MShape) -> Order {
    total_order(n, shape, SymbolType::UNIPOTENT, TieBreak::LexDesc).unwrap()
}

fn sh(m: &[usize]) -> MShape {
    MShape::new(m.to_vec()).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn of(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }

    fn from_reports(reports: &[Report], what: &str) -> Self {
        let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| format!("{} {}", r.check, r.instance)).collect();
        if failed.is_empty() {
            Outcome::of(true, format!("{what}: {} checks", reports.len()))
        } else {
            Outcome::of(false, format!("{what}: {} of {} failed, first {}", failed.len(), reports.len(), failed[0]))
        }
    }
}

/// P and Q at the default shapes, built once per (e, n) and shared.
struct Bases(HashMap<(usize, u32), MacdonaldBasis>);

impl Bases {
    fn get(&mut self, e: usize, n: u32) -> &MacdonaldBasis {
        self.0.entry((e, n)).or_insert_with(|| build_pq(&order(n, &MShape::default_for(n, e))).unwrap())
    }
}

fn c1_published_blocks() -> Outcome {
    let mut blocks: Vec<serde_json::Value> = common::fixture("c2_blocks.json")["blocks"].as_array().unwrap().clone();
    blocks.push(common::fixture("c6_block.json"));
    let mut bad = Vec::new();
    for block in &blocks {
        let (ord, f) = common::pinned_order(block);
        let want = common::expected_block(block);
        for sign in [Sign::Plus, Sign::Minus] {
            if matrix_b(1, sign, &ord).unwrap().family_block(f) != want {
                bad.push(format!("{} sign {}", block["name"], sign.symbol()));
            }
        }
    }
    Outcome::of(bad.is_empty(), format!("{} blocks, both signs; mismatches {bad:?}", blocks.len()))
}

fn c2_h_closed_form() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for m in 1..=2usize {
        let shape = sh(&[m + 1, m]);
        let one_minus = |k: i64| &QTRational::one() - &QTRational::t_pow(k);
        let c = &(&one_minus(m as i64) * &one_minus(m as i64 + 1)) / &(&one_minus(1) * &one_minus(1));
        let tm = QTRational::t_pow(-(2 * m as i64 + 1));
        for n in 1..=3 {
            let o = order(n, &shape);
            for sign in [Sign::Plus, Sign::Minus] {
                let b = matrix_b(1, sign, &o).unwrap();
                let h = matrix_h(sign, &o).unwrap();
                for f in 0..o.blocks().len() {
                    let bf = b.family_block(f);
                    let want = bf.scale(&tm).sub(&RatMatrix::scalar(bf.rows(), &(&tm * &c))).unwrap();
                    checked += 1;
                    if h.family_block(f) != want {
                        bad.push(format!("m={m} n={n} family {}", f + 1));
                    }
                }
            }
        }
    }
    Outcome::of(bad.is_empty(), format!("m in 1..=2, n in 1..=3: {checked} family blocks; mismatches {bad:?}"))
}

fn c3_conjecture_a() -> Outcome {
    let mut reports = Vec::new();
    for n in 1..=5 {
        for sign in [Sign::Plus, Sign::Minus] {
            reports.push(check_conjecture_a(&order(n, &MShape::default_for(n, 2)), sign).unwrap());
        }
    }
    Outcome::from_reports(&reports, "e=2, n=1..5, both signs")
}

fn c4_q_eq_t(bases: &mut Bases) -> Outcome {
    let mut bad = Vec::new();
    for e in 1..=2 {
        for n in 1..=4 {
            let b = bases.get(e, n);
            for (name, x) in [("P+", &b.xplus), ("P-", &b.xminus)] {
                match x.at_q_eq_t() {
                    Ok(m) if m.is_identity() => {}
                    Ok(_) => bad.push(format!("e={e} n={n} {name}")),
                    Err(err) => bad.push(format!("e={e} n={n} {name}: {err}")),
                }
            }
        }
    }
    Outcome::of(bad.is_empty(), format!("e in 1..=2, n in 1..=4; non-identity {bad:?}"))
}

fn c5_classical(bases: &mut Bases) -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let (parts, want) = common::classical::macdonald_p(n);
        let b = bases.get(1, n);
        let idx: Vec<usize> =
            parts.iter().map(|p| b.order.index_of(&EPartition::from_vecs(std::slice::from_ref(p)).unwrap()).unwrap()).collect();
        for (name, x) in [("P+", &b.xplus), ("P-", &b.xminus)] {
            let m = b.in_monomial_basis(x);
            let same = (0..parts.len()).all(|i| (0..parts.len()).all(|j| m.get(idx[i], idx[j]) == want.get(i, j)));
            if !same {
                bad.push(format!("n={n} {name}"));
            }
        }
    }
    Outcome::of(bad.is_empty(), format!("n in 1..=4 against Gram-Schmidt oracle; mismatches {bad:?}"))
}

fn c6_duality() -> Outcome {
    let mut reports = Vec::new();
    for e in 1..=3 {
        for n in 1..=3 {
            reports.push(verify_duality(n, &MShape::default_for(n, e)).unwrap());
        }
    }
    Outcome::from_reports(&reports, "e in 1..=3, n in 1..=3")
}

fn c7_kernel() -> Outcome {
    let reports: Vec<Report> = (1..=2).map(|e| verify_kernel(2, &MShape::default_for(2, e)).unwrap()).collect();
    Outcome::from_reports(&reports, "d in 0..=2, e in 1..=2")
}

fn c8_hall_littlewood() -> Outcome {
    let shape = sh(&[3, 3]);
    let zero = Subst::Value(CycloScalar::zero());
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 0..2 {
        for m in 0..=3 {
            for sign in [Sign::Plus, Sign::Minus] {
                let g0 = g_function(k, m, sign, &shape).substitute(&zero, &Subst::Keep).unwrap();
                checked += 1;
                if g0 != hall_littlewood_q(k, m, sign, &shape) {
                    bad.push(format!("k={k} m={m} {}", sign.symbol()));
                }
            }
        }
    }
    Outcome::of(bad.is_empty(), format!("e=2, rows k in 0..2, m in 0..=3, both signs: {checked} cases; mismatches {bad:?}"))
}

/// Shapes (n+1, n) but with every row at least 2, so that r = 2 is admissible.
fn shape_r2(n: u32) -> MShape {
    MShape::default_for(n.max(2), 2)
}

fn c9_adjoint() -> Outcome {
    let mut reports = Vec::new();
    for n in 1..=3 {
        for r in 1..=2 {
            reports.push(verify_adjoint(r, &order(n, &shape_r2(n))).unwrap());
        }
    }
    Outcome::from_reports(&reports, "e=2, n in 1..=3, r in 1..=2")
}

fn c10_family_action(bases: &mut Bases) -> Outcome {
    let mut reports = Vec::new();
    let mut symbol_route = Vec::new();
    for n in 1..=4 {
        let b = bases.get(2, n);
        for r in 1..=2.min(b.order.shape.m1()) {
            reports.push(verify_family_action(r, b).unwrap());
            for sign in [Sign::Plus, Sign::Minus] {
                let full = matrix_b(r, sign, &b.order).unwrap();
                for f in 0..b.order.blocks().len() {
                    if diag_block_direct(&b.order, f, r, sign).unwrap() != full.family_block(f) {
                        symbol_route.push(format!("n={n} r={r} family {}", f + 1));
                    }
                }
            }
        }
    }
    let mut out = Outcome::from_reports(&reports, "e=2, n in 1..=4, r <= 2");
    if !symbol_route.is_empty() {
        out.pass = false;
    }
    out.detail += &format!("; eigenvalue blocks from symbols, mismatches {symbol_route:?}");
    out
}

fn c11_two_paths() -> Outcome {
    let mut reports = Vec::new();
    for n in 1..=4 {
        let shape = MShape::default_for(n, 2);
        reports.push(verify_theorem36(&order(n, &shape)).unwrap());
        reports.push(verify_order_independence(n, &shape).unwrap());
    }
    Outcome::from_reports(&reports, "e=2, n in 1..=4, Sylvester route vs elimination, three orders")
}

fn c12_commutation() -> (Outcome, Report) {
    let reports: Vec<Report> = (1..=4).map(|n| verify_commutation(&order(n, &shape_r2(n)), 2).unwrap()).collect();
    let closed = verify_f3_closed_form(2).unwrap();
    let mut out = Outcome::from_reports(&reports, "commutation at q=t, e=2, n in 1..=4, r <= 2");
    out.pass &= closed.pass;
    out.detail += &format!(
        "; closed form on the shifted three-element family (m=2): {} {}",
        if closed.pass { "holds" } else { "fails" },
        closed.instance["notes"]
    );
    (out, closed)
}

fn c13_shift() -> (Outcome, Vec<Report>) {
    let mut reports = Vec::new();
    for (a, b) in [(sh(&[2, 1]), sh(&[3, 2])), (sh(&[3, 2]), sh(&[4, 3]))] {
        for sign in [Sign::Plus, Sign::Minus] {
            reports.push(verify_shift_stability(2, &a, &b, sign).unwrap());
        }
    }
    (Outcome::from_reports(&reports, "n=2, (2,1)->(3,2) and (3,2)->(4,3)"), reports)
}

/// The known failures must keep their documented form.
fn expected_red_is_unchanged(closed: &Report, shift: &[Report]) -> bool {
    let scaled = closed.instance["notes"][0]
        .as_array()
        .is_some_and(|v| v.iter().all(|x| x["holds_with_r_factorial"] == true));
    let only_r2 = closed.witnesses.iter().all(|w| w["r"] == 2);
    let first = &shift[0];
    let scalar_family =
        first.witnesses.iter().any(|w| w["family"] == "(2;-)" && w["block"] == "[-1/t^2]\n");
    scaled && only_r2 && scalar_family
}

fn main() {
    let start = Instant::now();
    let mut bases = Bases(HashMap::new());
    let mut lines: Vec<(u32, &str, Outcome, f64)> = Vec::new();
    let mut run = |id: u32, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t0 = Instant::now();
        let out = f();
        let secs = t0.elapsed().as_secs_f64();
        println!(
            "criterion {id:>2} {} {name} [tolerance: exact] {:.1}s :: {}",
            if out.pass { "PASS" } else { "FAIL" },
            secs,
            out.detail
        );
        lines.push((id, name, out, secs));
    };
    run(1, "published family blocks", &mut c1_published_blocks);
    run(2, "H closed form on (m+1,m)", &mut c2_h_closed_form);
    run(3, "disjoint H spectra", &mut c3_conjecture_a);
    run(4, "q=t gives Schur functions", &mut || c4_q_eq_t(&mut bases));
    run(5, "e=1 classical oracle", &mut || c5_classical(&mut bases));
    run(6, "g/m duality", &mut c6_duality);
    run(7, "kernel expansions agree", &mut c7_kernel);
    run(8, "q=0 Hall-Littlewood", &mut c8_hall_littlewood);
    run(9, "operator adjointness", &mut c9_adjoint);
    run(10, "family action of D^r", &mut || c10_family_action(&mut bases));
    run(11, "two constructions and order independence", &mut c11_two_paths);
    let mut closed = None;
    run(12, "commutation and shifted closed form", &mut || {
        let (o, c) = c12_commutation();
        closed = Some(c);
        o
    });
    let mut shift = None;
    run(13, "shift stability of H", &mut || {
        let (o, r) = c13_shift();
        shift = Some(r);
        o
    });
    let failed: Vec<u32> = lines.iter().filter(|l| !l.2.pass).map(|l| l.0).collect();
    let unexpected: Vec<u32> = failed.iter().copied().filter(|id| !EXPECTED_RED.contains(id)).collect();
    println!(
        "acceptance: {} of {} criteria pass, failing {failed:?} (known: {EXPECTED_RED:?}), total {:.1}s",
        lines.len() - failed.len(),
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    let known_shape = expected_red_is_unchanged(&closed.unwrap(), &shift.unwrap());
    if !unexpected.is_empty() || !known_shape {
        eprintln!("acceptance: unexpected failures {unexpected:?}, known failures unchanged: {known_shape}");
        std::process::exit(1);
    }
}
