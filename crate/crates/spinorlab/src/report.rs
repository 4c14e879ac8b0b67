//! Report documents and their renderings.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use spinorlab_core::classify::{ClassReport, HelicityProfile};
use spinorlab_core::symmetries::{EigenVerdict, SymmetryReport};
use spinorlab_core::{BiSpinor, Direction, FourMomentum, LounestoClass, C64};

use crate::json::{format_float, to_canonical_string};
use crate::run::{Analysis, Outcome, Report};
use crate::sample::SampleSummary;
use crate::verify::{Bound, SuiteSummary};

/// Output rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Canonical JSON.
    #[default]
    #[value(alias = "json")]
    Structured,
    /// Plain-text tables.
    Human,
}

/// Order of the spin-tensor components in reports.
pub const TENSOR_KEYS: [&str; 6] = ["01", "02", "03", "12", "13", "23"];

/// Conventions in force, echoed in every structured report.
pub fn conventions() -> Value {
    json!({
        "metric": "(+,-,-,-)",
        "spinor": "psi = (phi_R; phi_L) = (a, b, c, d)",
        "gamma": "chiral: gamma0 = [[0, I], [I, 0]], gammai = [[0, -sigma_i], [sigma_i, 0]]",
        "gamma5": "diag(I, -I)",
        "sigma": "psibar psi",
        "omega": "i psibar gamma5 psi",
        "J": "psibar gamma^mu psi",
        "K": "psibar gamma^mu gamma5 psi",
        "S": "i psibar gamma^mu gamma^nu psi, ordered 01, 02, 03, 12, 13, 23",
        "charge_conjugation": "C psi = (i Theta phi_L*, -i Theta phi_R*), Theta = [[0, -1], [1, 0]]",
        "parity": "P psi = gamma0 psi(E, -p), intrinsic phase +1",
        "zero_test": "|x| <= epsilon_class * psi^dagger psi",
    })
}

fn num(x: f64) -> Value {
    json!(x)
}

fn complex(z: C64) -> Value {
    json!([z.re, z.im])
}

fn direction(d: Direction) -> Value {
    json!({"theta": d.theta(), "phi": d.phi()})
}

fn momentum(p: &FourMomentum) -> Value {
    json!({
        "m": p.mass(),
        "pmag": p.pmag(),
        "theta": p.direction().theta(),
        "phi": p.direction().phi(),
        "energy": p.energy(),
    })
}

fn spinor(psi: &BiSpinor) -> Value {
    let origin = psi.origin();
    json!({
        "components": psi.components().iter().map(|z| complex(*z)).collect::<Vec<_>>(),
        "family": origin.family.name(),
        "direction": origin.direction.map(direction),
        "boosted": origin.boost.is_some(),
        "norm_sqr": psi.norm_sqr(),
    })
}

fn class(c: LounestoClass) -> Value {
    json!({
        "index": c.index(),
        "annotation": c.annotation().map(|a| a.label()),
    })
}

fn helicity(h: &HelicityProfile) -> Value {
    json!({
        "direction": direction(h.direction),
        "right": h.right.label(),
        "left": h.left.label(),
        "category": h.category.label(),
        "residuals": h.residuals,
    })
}

fn class_report(r: &ClassReport) -> Map<String, Value> {
    let b = &r.bilinears;
    let s: Map<String, Value> = TENSOR_KEYS
        .iter()
        .zip(b.s)
        .map(|(k, v)| (k.to_string(), num(v)))
        .collect();
    let mut m = Map::new();
    m.insert(
        "bilinears".into(),
        json!({"sigma": b.sigma, "omega": b.omega, "J": b.j, "K": b.k, "S": s}),
    );
    m.insert(
        "fpk_residuals".into(),
        json!({
            "current_square": r.fpk.current_square,
            "orthogonality": r.fpk.orthogonality,
            "null_sum": r.fpk.null_sum,
        }),
    );
    m.insert("class".into(), class(r.class));
    m.insert(
        "helicity".into(),
        r.helicity.as_ref().map_or(Value::Null, helicity),
    );
    m.insert(
        "findings".into(),
        r.findings
            .iter()
            .map(|f| Value::String(f.to_string()))
            .collect(),
    );
    m
}

fn verdict(v: &EigenVerdict) -> Value {
    json!({
        "eigenvalue": v.eigenvalue.map(|s| format!("{}1", s.symbol())),
        "residual": v.residual,
        "nearest": format!("{}1", v.nearest.symbol()),
    })
}

fn symmetries(s: &SymmetryReport) -> Value {
    let c = &s.charge.constraints;
    let mut charge = verdict(&s.charge.verdict);
    charge["constraints"] = json!({
        "sign": format!("{}1", c.sign.symbol()),
        "phase_pattern": c.phase_pattern,
        "norm_a_d": c.norm_a_d,
        "norm_b_c": c.norm_b_c,
    });
    json!({
        "parity": s.parity.as_ref().map(verdict),
        "charge_conjugation": charge,
        "dirac_residual": {"plus_m": s.dirac[0], "minus_m": s.dirac[1]},
        "dirac_flip_residual": s.dirac_flip,
        "theta_link_residual": s.theta_link,
        "phases": {"theta1": s.phases.theta1, "theta2": s.phases.theta2},
        "zetas": [complex(s.zetas[0]), complex(s.zetas[1])],
    })
}

fn analysis(a: &Analysis) -> Map<String, Value> {
    let mut m = class_report(&a.class);
    m.insert("spinor".into(), spinor(&a.spinor));
    m.insert(
        "momentum".into(),
        a.momentum.as_ref().map_or(Value::Null, momentum),
    );
    if let Some(s) = &a.symmetry {
        m.insert("symmetries".into(), symmetries(s));
    }
    m
}

/// The structured report document.
pub fn to_value(report: &Report) -> Value {
    let mut m = Map::new();
    m.insert("conventions".into(), conventions());
    m.insert(
        "job".into(),
        serde_json::to_value(report.job.to_document()).expect("job document serializes"),
    );
    m.insert("mode".into(), Value::String(report.job.mode.name().into()));
    match &report.outcome {
        Outcome::Analysis(a) => m.extend(analysis(a)),
        Outcome::Sample(s) => {
            m.insert(
                "sample".into(),
                serde_json::to_value(s).expect("summary serializes"),
            );
        }
        Outcome::Verify(s) => {
            m.insert(
                "verify".into(),
                serde_json::to_value(s).expect("summary serializes"),
            );
        }
    }
    Value::Object(m)
}

/// Renders `report` in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Structured => to_canonical_string(&to_value(report)),
        Format::Human => human(report),
    }
}

fn class_label(c: LounestoClass) -> String {
    match (c.index(), c.annotation()) {
        (Some(n), Some(a)) => format!("{n} ({})", a.label()),
        _ => "unclassifiable".into(),
    }
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), format_float)
}

fn human(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode: {}", report.job.mode.name());
    match &report.outcome {
        Outcome::Analysis(a) => human_analysis(&mut out, a),
        Outcome::Sample(s) => human_sample(&mut out, s),
        Outcome::Verify(s) => human_verify(&mut out, s),
    }
    out
}

fn human_analysis(out: &mut String, a: &Analysis) {
    let r = &a.class;
    let b = &r.bilinears;
    let _ = writeln!(out, "family: {}", a.spinor.origin().family.name());
    for (name, z) in ["a", "b", "c", "d"].iter().zip(a.spinor.components()) {
        let sign = if z.im.is_sign_negative() && z.im != 0.0 {
            '-'
        } else {
            '+'
        };
        let _ = writeln!(
            out,
            "  {name} = {} {sign} {}i",
            format_float(z.re),
            format_float(z.im.abs())
        );
    }
    let _ = writeln!(out, "class: {}", class_label(r.class));
    let _ = writeln!(out, "{:<8} {}", "sigma", format_float(b.sigma));
    let _ = writeln!(out, "{:<8} {}", "omega", format_float(b.omega));
    for (mu, (j, k)) in b.j.iter().zip(b.k).enumerate() {
        let _ = writeln!(
            out,
            "J{mu:<7} {:<25} K{mu} {}",
            format_float(*j),
            format_float(k)
        );
    }
    for (key, s) in TENSOR_KEYS.iter().zip(b.s) {
        let _ = writeln!(out, "S{key:<7} {}", format_float(s));
    }
    let _ = writeln!(out, "fpk residual max: {}", format_float(r.fpk.max()));
    match &r.helicity {
        Some(h) => {
            let _ = writeln!(
                out,
                "helicity: right {}, left {}, category {}",
                h.right.label(),
                h.left.label(),
                h.category.label()
            );
        }
        None => out.push_str("helicity: not evaluated\n"),
    }
    for f in &r.findings {
        let _ = writeln!(out, "finding: {f}");
    }
    if let Some(s) = &a.symmetry {
        let show = |v: &EigenVerdict| match v.eigenvalue {
            Some(e) => format!("{}1 (residual {})", e.symbol(), format_float(v.residual)),
            None => format!("none (residual {})", format_float(v.residual)),
        };
        let _ = writeln!(
            out,
            "parity: {}",
            s.parity.as_ref().map_or("unavailable".into(), show)
        );
        let _ = writeln!(out, "charge conjugation: {}", show(&s.charge.verdict));
        let _ = writeln!(
            out,
            "dirac residual: +m {}, -m {}",
            format_float(s.dirac[0]),
            format_float(s.dirac[1])
        );
        let _ = writeln!(out, "dirac flip residual: {}", opt(s.dirac_flip));
        let _ = writeln!(out, "theta link residual: {}", format_float(s.theta_link));
    }
}

fn human_sample(out: &mut String, s: &SampleSummary) {
    let _ = writeln!(out, "population: {}", s.population.name());
    let _ = writeln!(out, "draws: {} (rejected {})", s.draws, s.rejected);
    let _ = writeln!(out, "{:<7} {:<18} {:>8}", "class", "annotation", "count");
    for n in 1..=6u8 {
        let c = LounestoClass::Class(n);
        let label = c.annotation().map_or("", |a| a.label());
        let count = s.classes.get(&n.to_string()).copied().unwrap_or(0);
        let _ = writeln!(out, "{n:<7} {label:<18} {count:>8}");
    }
    let unclassifiable = s.classes.get("unclassifiable").copied().unwrap_or(0);
    let _ = writeln!(
        out,
        "{:<7} {:<18} {unclassifiable:>8}",
        "-", "unclassifiable"
    );
    for (k, v) in &s.categories {
        let _ = writeln!(out, "helicity {k}: {v}");
    }
    let _ = writeln!(out, "expected class misses: {}", s.expected_class_misses);
    let _ = writeln!(
        out,
        "C eigen: +1 {}, -1 {}, none {}",
        s.charge.plus, s.charge.minus, s.charge.none
    );
    let _ = writeln!(
        out,
        "dirac: +m {}, -m {}, none {}",
        s.dirac.plus, s.dirac.minus, s.dirac.none
    );
}

fn human_verify(out: &mut String, s: &SuiteSummary) {
    let _ = writeln!(
        out,
        "{:<34} {:<6} {:>8} {:>10} {:<26} threshold",
        "property", "status", "draws", "violations", "worst"
    );
    for p in &s.properties {
        let bound = match (p.bound, p.threshold) {
            (_, None) => "-".to_string(),
            (Bound::Below, Some(t)) => format!("< {}", format_float(t)),
            (Bound::Above, Some(t)) => format!("> {}", format_float(t)),
        };
        let _ = writeln!(
            out,
            "{:<34} {:<6} {:>8} {:>10} {:<26} {bound}",
            p.name,
            if p.passed { "PASS" } else { "FAIL" },
            p.draws,
            p.violations,
            opt(p.worst)
        );
    }
    let _ = writeln!(out, "overall: {}", if s.passed { "PASS" } else { "FAIL" });
}
