use std::fmt::Write as _;
use std::process::ExitCode;

use operadic_core::bianchi::{dynamical_deformation, BianchiLabel, BianchiType, TABLE_HEADERS};
use operadic_core::ncalg::render::{render, render_coeff, Style};
use operadic_core::ncalg::Alphabet;
use operadic_core::oscillator::{trajectory as flow_point, HOParams};
use operadic_core::qjacobi::{
    corollary_he, derivative_algebra, q_structure, semiclassical_jacobi, semiclassical_xi,
    spectrum_determinant, symbolic_jacobiator, verify_theorem_all, Convention,
};
use operadic_core::suite::{self, fmt_float, SuiteConfig, Tolerances};
use operadic_core::{Error, Result};
use serde_json::{json, Map, Value};

use crate::{
    AlphabetArg, ConventionArg, DeformArgs, FlowArgs, Format, JacobiArgs, Label, Output,
    SpectrumArgs, Target, TrajectoryArgs, VerifyArgs,
};

fn bianchi_type(label: Label) -> BianchiType {
    match label {
        Label::VIIa => BianchiType::VIIa,
        Label::IIIa1 => BianchiType::IIIa1,
        Label::VIa => BianchiType::VIa,
        Label::II => BianchiType::II,
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidArgument(format!("--{name} must be positive, got {v}")))
    }
}

pub fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut tolerances = Tolerances::default();
    if let Some(t) = args.tol_fd {
        tolerances.fd = positive("tol-fd", t)?;
    }
    if let Some(t) = args.tol_exact_float {
        tolerances.exact_float = positive("tol-exact-float", t)?;
    }
    let config = SuiteConfig {
        seed: args.seed,
        tolerances,
        ..SuiteConfig::default()
    };
    let target = match args.target {
        Target::All => suite::Target::All,
        Target::Operad => suite::Target::Operad,
        Target::Lax => suite::Target::Lax,
        Target::Bianchi => suite::Target::Bianchi,
        Target::Quantum => suite::Target::Quantum,
    };
    let reports = suite::run(target, &config)?;
    let mut out = String::new();
    for r in &reports {
        match args.output {
            Output::Text => out.push_str(&r.to_text()),
            Output::Json => {
                out.push_str(&serde_json::to_string(r).expect("report serializes"));
                out.push('\n');
            }
        }
        eprintln!("{}: {:.3}s", r.suite, r.wall_time.as_secs_f64());
    }
    print!("{out}");
    Ok(if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

struct Flow {
    params: HOParams,
    times: Vec<f64>,
}

fn flow(args: &FlowArgs) -> Result<Flow> {
    let params = HOParams::from_energy(args.omega, args.energy)?;
    if args.steps == 0 {
        return Err(Error::InvalidArgument("--steps must be at least 1".into()));
    }
    let t1 = args
        .t1
        .unwrap_or(args.t0 + 4.0 * std::f64::consts::PI / args.omega);
    if !(args.t0.is_finite() && t1.is_finite()) {
        return Err(Error::InvalidArgument("time range must be finite".into()));
    }
    let times = (0..=args.steps)
        .map(|k| args.t0 + (t1 - args.t0) * k as f64 / args.steps as f64)
        .collect();
    Ok(Flow { params, times })
}

fn write_table(format: Format, header: &[&str], rows: &[Vec<f64>], meta: Value) -> String {
    match format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(|v| fmt_float(*v)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), json!(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let mut obj = meta;
            obj["rows"] = Value::Array(rows);
            let mut out = serde_json::to_string(&obj).expect("table serializes");
            out.push('\n');
            out
        }
    }
}

pub fn deform(args: DeformArgs) -> Result<ExitCode> {
    let label = BianchiLabel::new(bianchi_type(args.label), args.a)?;
    let f = flow(&args.flow)?;
    let mut header = vec!["t", "q", "p", "Q", "P"];
    header.extend(TABLE_HEADERS);
    let mut rows = Vec::with_capacity(f.times.len());
    for &t in &f.times {
        let pt = flow_point(&f.params, t);
        let mu = dynamical_deformation(&label, &f.params, t)?;
        let mut row = vec![t, pt.q, pt.p, pt.big_q, pt.big_p];
        row.extend(mu.table());
        rows.push(row);
    }
    let meta = json!({
        "label": label.ty().name(),
        "a": label.a(),
        "omega": f.params.omega(),
        "energy": f.params.energy(),
        "p0": f.params.p0(),
    });
    print!("{}", write_table(args.flow.format, &header, &rows, meta));
    Ok(ExitCode::SUCCESS)
}

pub fn trajectory(args: TrajectoryArgs) -> Result<ExitCode> {
    let f = flow(&args.flow)?;
    let header = ["t", "q", "p", "Q", "P", "H"];
    let rows: Vec<Vec<f64>> = f
        .times
        .iter()
        .map(|&t| {
            let pt = flow_point(&f.params, t);
            vec![t, pt.q, pt.p, pt.big_q, pt.big_p, pt.energy]
        })
        .collect();
    let meta = json!({
        "omega": f.params.omega(),
        "energy": f.params.energy(),
        "p0": f.params.p0(),
    });
    print!("{}", write_table(args.flow.format, &header, &rows, meta));
    Ok(ExitCode::SUCCESS)
}

pub fn jacobi(args: JacobiArgs) -> Result<ExitCode> {
    let ty = bianchi_type(args.label);
    let conv = match args.convention {
        ConventionArg::Left => Convention::Left,
        ConventionArg::Right => Convention::Right,
    };
    let alphabet = match args.alphabet {
        AlphabetArg::Pq => Alphabet::PQ,
        AlphabetArg::QpPQ => Alphabet::QpPQ,
    };
    let qsc = q_structure(ty, alphabet)?;
    let computed = symbolic_jacobiator(&qsc, conv);
    let theorem = verify_theorem_all(ty)?;
    let xi = semiclassical_xi()?;
    let sj = semiclassical_jacobi(ty)?;
    let he = corollary_he(ty)?;
    let d = derivative_algebra(ty)?;

    let selected = theorem
        .iter()
        .find(|r| r.convention == conv && r.alphabet == alphabet.name())
        .expect("all configurations are checked");
    let components: Vec<String> = selected.components.iter().map(|c| c.computed.clone()).collect();
    debug_assert_eq!(computed.0.len(), 3);

    let report = json!({
        "label": ty.name(),
        "convention": conv.name(),
        "alphabet": alphabet.name(),
        "jacobi": components,
        "theorem": theorem,
        "xi": xi.iter().map(|x| json!({
            "computed": x.computed.to_string(),
            "reduced": x.reduced.to_string(),
            "matches": x.matches,
        })).collect::<Vec<_>>(),
        "semiclassical": sj.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "semiclassical_matches": sj.matches,
        "energy_conservation": he.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "energy_conservation_hbar": he.components.iter().map(|c| render(c, Style::Hbar)).collect::<Vec<_>>(),
        "energy_conservation_matches": he.matches,
        "C": d.c.to_string(),
        "C_hbar": render_coeff(&d.c, Style::Hbar),
        "beta_sq": d.beta_sq.to_string(),
        "beta_sq_hbar": render_coeff(&d.beta_sq, Style::Hbar),
        "closure": d.closure,
        "basis_bracket": d.basis_bracket,
        "heisenberg": d.heisenberg,
    });

    let out = match args.output {
        Output::Json => {
            let mut s = serde_json::to_string(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Output::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "label {}  convention {}  alphabet {}", ty, conv, alphabet.name());
            for (i, c) in components.iter().enumerate() {
                let _ = writeln!(s, "J{} = {c}", i + 1);
            }
            for r in &theorem {
                let verdict = if r.exact_match {
                    "exact match".to_string()
                } else {
                    let bad: Vec<String> = r
                        .components
                        .iter()
                        .filter(|c| !c.matches)
                        .map(|c| format!("J{}", c.index))
                        .collect();
                    format!("mismatch in {}", bad.join(", "))
                };
                let _ = writeln!(s, "closed form [{} {}]: {verdict}", r.convention, r.alphabet);
                for c in r.components.iter().filter(|c| !c.matches) {
                    let _ = writeln!(s, "  residual J{} = {}", c.index, c.residual);
                }
            }
            for (i, x) in xi.iter().enumerate() {
                let _ = writeln!(s, "xi{} = {}", i + 1, x.computed);
                let _ = writeln!(s, "    = {}  (h to the right: {})", x.reduced, x.matches);
            }
            for (i, c) in sj.components.iter().enumerate() {
                let _ = writeln!(s, "semiclassical J{} = {c}", i + 1);
            }
            for (i, c) in he.components.iter().enumerate() {
                let _ = writeln!(s, "energy conserved J{} = {c}", i + 1);
            }
            let _ = writeln!(s, "C = {}  ({})", d.c, render_coeff(&d.c, Style::Hbar));
            let _ = writeln!(s, "beta^2 = {}  ({})", d.beta_sq, render_coeff(&d.beta_sq, Style::Hbar));
            let _ = writeln!(s, "[J1,J3] = [J2,J3] = 0: {}", d.closure);
            let _ = writeln!(s, "[e2,e3] = beta^2 e1: {}", d.basis_bracket);
            let _ = writeln!(s, "Heisenberg after e2/beta, e3/beta: {}", d.heisenberg);
            s
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

pub fn spectrum(args: SpectrumArgs) -> Result<ExitCode> {
    let header = ["n", "E_over_hbar_omega", "abs_Delta"];
    let rows: Vec<Vec<f64>> = (0..=args.n_max)
        .map(|n| vec![f64::from(n), f64::from(n) + 0.5, spectrum_determinant(n)])
        .collect();
    let out = match args.format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for r in &rows {
                let _ = writeln!(out, "{},{},{}", r[0], fmt_float(r[1]), fmt_float(r[2]));
            }
            out
        }
        Format::Json => write_table(args.format, &header, &rows, json!({})),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}
