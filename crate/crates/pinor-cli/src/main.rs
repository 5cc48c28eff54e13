use clap::{Args, Parser, Subcommand};
use pinor_cli::expr::{parse_expr, print_expr, EvalContext};
use pinor_cli::session::{build_rep, resolve, OutputFormat, Session};
use pinor_core::clifford::{classify, GammaRep, KSign};
use pinor_core::conj::{
    adjoint_sign_table, canonical_c_sign, charge_conj, cpt_composite,
    hermitian_similarity, kramers_check, majorana_parity_test, odd_conj_choice, SimilaritySign,
};
use pinor_core::cover::{
    cover_group_classify, group_structure, named_elements, planar_cover_exact, solve_cover,
    LorentzMatrix, ParityChoice,
};
use pinor_core::klein::{current_table, current_verdicts, d_g_ren, g_ren, KleinConfig, PinKind};
use pinor_core::matrix::ExactMatrix;
use pinor_core::qft::{
    ledger_constraints, pion_final_state, pion_intrinsic_parity, positronium_phases,
    sigma_decay_trace, spin_sum, spin_sum_closed, trace_product, trace_sign_law, FourMomentum,
    ParityHypothesis, PhaseLedger, SigmaDecayInput, SpinorKind,
};
use pinor_core::scalar::GaussScalar;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "pinor", version, about = "Exact Clifford/Pin toolkit", disable_help_subcommand = true)]
struct Cli {
    /// signature as 't,s' (default from PINOR_SIGNATURE or config file)
    #[arg(long, global = true)]
    sig: Option<String>,
    /// representation: dirac|chiral (1,3), hat|majorana (3,1), small
    #[arg(long, global = true)]
    rep: Option<String>,
    /// machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// key=value config file with defaults
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a gamma representation and print its generators
    Construct(ConstructArgs),
    /// Mod-8 classification of the real Clifford algebra C(m,n)
    Classify {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Pin covers: named elements, group classification, explicit solving
    Cover(CoverArgs),
    /// Conjugation suite: C, H±, Majorana, Kramers, CPT, adjoint signs
    Conj {
        /// c|h|majorana|kramers|cpt|adjoint|all
        #[arg(long, default_value = "all")]
        what: String,
    },
    /// Traces of generator products and the hat/standard sign law
    Trace {
        /// comma-separated generator positions, e.g. 0,1,0,1
        #[arg(long)]
        positions: Option<String>,
        /// report the hat-vs-standard value ratio for this trace length
        #[arg(long)]
        sign_law: Option<usize>,
    },
    /// Spin sums from exact plane-wave kernels
    Spinsum {
        /// covariant components, e.g. 5,3,0,0
        #[arg(long)]
        p: String,
        #[arg(long)]
        mass: String,
        /// u or v
        #[arg(long, default_value = "u")]
        kind: String,
    },
    /// Sigma0 -> Lambda0 e+ e- squared matrix element in both conventions
    Sigma(SigmaArgs),
    /// Phase bookkeeping: parity ledger, pion parity, positronium
    Phases(PhasesArgs),
    /// Klein-bottle vacuum current table
    Klein(KleinArgs),
    /// Evaluate a gamma-monomial expression
    Eval { expr: String },
    /// Emit all golden tables
    Tables,
}

#[derive(Args)]
struct ConstructArgs {
    /// tensor product 't,s:t,s' of two small even representations
    #[arg(long)]
    tensor: Option<String>,
    /// k sign for --tensor: plus (k^2=+1) or minus (k^2=-1)
    #[arg(long, default_value = "plus")]
    k_sign: String,
}

#[derive(Args)]
struct CoverArgs {
    /// named elements P(1), P(3), T, PT with squares
    #[arg(long)]
    named: bool,
    /// classify the {±1, Λ_P, Λ_T} group for both parity choices
    #[arg(long)]
    group: bool,
    /// solve the covering equation for a diagonal Lorentz map, e.g. 1,1,1,-1
    #[arg(long)]
    solve_diag: Option<String>,
    /// planar cover 'alpha,beta,num,den' for angle (num/den)*pi
    #[arg(long)]
    rotation: Option<String>,
}

#[derive(Args)]
struct SigmaArgs {
    /// plus or minus parity hypothesis
    #[arg(long, default_value = "plus")]
    hypothesis: String,
    #[arg(long, default_value = "2,1/2,-1/3,1")]
    q: String,
    #[arg(long, default_value = "3,1,1/2,-1")]
    p: String,
    #[arg(long, default_value = "1,-1/2,1/4,2")]
    k: String,
    #[arg(long, default_value = "1,1/3,0,-2")]
    k1: String,
    #[arg(long, default_value = "2,0,1,1/2")]
    k2: String,
    #[arg(long, default_value = "3")]
    m_sigma: String,
    #[arg(long, default_value = "2")]
    m_lambda: String,
    #[arg(long, default_value = "1/2")]
    m_e: String,
}

#[derive(Args)]
struct PhasesArgs {
    /// pion capture: 'eta_p,eta_n' -> solved eta_pi
    #[arg(long)]
    pion: Option<String>,
    /// nucleon-pair channels for total j
    #[arg(long)]
    pion_channels: Option<u32>,
    /// positronium 'l,s' with eta_a eta_b = -1, xi_a xi_b = 1
    #[arg(long)]
    positronium: Option<String>,
    /// ledger 'eta_a,eta_b,xi_a,xi_b,lambda'
    #[arg(long)]
    ledger: Option<String>,
    #[arg(long)]
    majorana: bool,
}

#[derive(Args)]
struct KleinArgs {
    /// 13 or 31
    #[arg(long, default_value = "13")]
    pin: String,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    #[arg(long, default_value_t = 0.3)]
    x3: f64,
    #[arg(long, default_value_t = 64)]
    n: u32,
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    /// CSV instead of the text table
    #[arg(long)]
    csv: bool,
}

fn scalars(text: &str) -> Result<Vec<GaussScalar>, String> {
    text.split(',')
        .map(|p| GaussScalar::from_str(p.trim()).map_err(|e| format!("bad scalar '{p}': {e}")))
        .collect()
}

fn matrix_value(m: &ExactMatrix) -> Value {
    Value::Array(
        m.to_string_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(Value::String).collect()))
            .collect(),
    )
}

fn print_matrix(m: &ExactMatrix) {
    for row in m.to_string_rows() {
        println!("  [{}]", row.join(", "));
    }
}

fn emit(session: &Session, value: &Value, text: impl FnOnce()) {
    if session.format == OutputFormat::Json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        text();
    }
}

fn run(cli: Cli) -> Result<(), String> {
    let csv = matches!(cli.cmd, Cmd::Klein(KleinArgs { csv: true, .. }));
    let session = resolve(
        cli.sig.as_deref(),
        cli.rep.as_deref(),
        cli.config.as_deref(),
        cli.json,
        csv,
    )?;
    match cli.cmd {
        Cmd::Construct(args) => construct(&session, &args),
        Cmd::Classify { m, n } => {
            let class = classify(m, n);
            emit(
                &session,
                &json!({"m": m, "n": n, "label": format!("{:?}", class.label), "k": class.k,
                        "display": class.to_string()}),
                || println!("C({m},{n}) ~ {class}"),
            );
            Ok(())
        }
        Cmd::Cover(args) => cover_cmd(&session, &args),
        Cmd::Conj { what } => conj_cmd(&session, &what),
        Cmd::Trace { positions, sign_law } => trace_cmd(&session, positions, sign_law),
        Cmd::Spinsum { p, mass, kind } => spinsum_cmd(&session, &p, &mass, &kind),
        Cmd::Sigma(args) => sigma_cmd(&session, &args),
        Cmd::Phases(args) => phases_cmd(&session, &args),
        Cmd::Klein(args) => klein_cmd(&session, &args),
        Cmd::Eval { expr } => eval_cmd(&session, &expr),
        Cmd::Tables => {
            print!("{}", golden_tables());
            Ok(())
        }
    }
}

fn rep_value(rep: &GammaRep) -> Value {
    rep.to_json()
}

fn construct(session: &Session, args: &ConstructArgs) -> Result<(), String> {
    let rep = if let Some(spec) = &args.tensor {
        let (left, right) = spec
            .split_once(':')
            .ok_or_else(|| format!("--tensor expects 't,s:t,s', got '{spec}'"))?;
        let parse = |text: &str| -> Result<GammaRep, String> {
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != 2 {
                return Err(format!("bad signature '{text}'"));
            }
            let t = parts[0].trim().parse().map_err(|_| format!("bad '{text}'"))?;
            let s = parts[1].trim().parse().map_err(|_| format!("bad '{text}'"))?;
            build_rep(t, s, "small")
        };
        let k = match args.k_sign.as_str() {
            "plus" => KSign::KSquaredPlus,
            "minus" => KSign::KSquaredMinus,
            other => return Err(format!("--k-sign must be plus or minus, got '{other}'")),
        };
        parse(left)?.tensor_build(&parse(right)?, k).map_err(|e| e.to_string())?
    } else {
        session.rep.clone()
    };
    let rep_name = if args.tensor.is_some() { "tensor" } else { session.rep_name.as_str() };
    emit(session, &rep_value(&rep), || {
        println!(
            "C({},{}) {} representation, dim {}",
            rep.signature.plus,
            rep.signature.minus,
            rep_name,
            rep.dim()
        );
        for (k, m) in rep.matrices.iter().enumerate() {
            println!("Gamma[label {}]:", rep.signature.label(k));
            print_matrix(m);
        }
    });
    Ok(())
}

fn cover_cmd(session: &Session, args: &CoverArgs) -> Result<(), String> {
    let rep = &session.rep;
    let mut out = serde_json::Map::new();
    let mut lines: Vec<String> = vec![];
    if args.named || (!args.group && args.solve_diag.is_none() && args.rotation.is_none()) {
        let named = named_elements(rep).map_err(|e| e.to_string())?;
        let rows: Vec<Value> = named
            .iter()
            .map(|n| {
                json!({"label": n.label, "element": n.pair.plus.to_string(),
                       "square": n.square, "real_scalar": n.pair.real_scalar})
            })
            .collect();
        for n in &named {
            lines.push(format!(
                "Lambda_{:5} = ±({})   square {}I",
                n.label,
                n.pair.plus,
                if n.square > 0 { "+" } else { "-" }
            ));
        }
        out.insert("named".into(), Value::Array(rows));
    }
    if args.group {
        let mut rows = vec![];
        for (choice, tag) in [(ParityChoice::P1, "P(1)"), (ParityChoice::P3, "P(3)")] {
            let class = cover_group_classify(rep, choice).map_err(|e| e.to_string())?;
            lines.push(format!(
                "{tag}: (a,b,c) = ({:+},{:+},{:+}), commute {:+}, {} ({}cliffordian)",
                class.a,
                class.b,
                class.c,
                class.commute,
                class.group_name,
                if class.cliffordian { "" } else { "non-" }
            ));
            rows.push(serde_json::to_value(&class).expect("serializable"));
        }
        out.insert("group".into(), Value::Array(rows));
    }
    if let Some(diag) = &args.solve_diag {
        let entries: Vec<i64> = diag
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad diagonal entry '{p}'")))
            .collect::<Result<_, String>>()?;
        if entries.len() != rep.d() {
            return Err(format!("expected {} diagonal entries", rep.d()));
        }
        let l = LorentzMatrix::diag(&entries, &rep.metric);
        let pairs = solve_cover(rep, &l);
        if pairs.is_empty() {
            lines.push("no cover exists".to_string());
        }
        let rows: Vec<Value> = pairs
            .iter()
            .map(|p| {
                lines.push(format!("Lambda = ±({})", p.plus));
                json!({"element": p.plus.to_string(), "mask": p.plus.mask,
                       "real_scalar": p.real_scalar})
            })
            .collect();
        out.insert("solutions".into(), Value::Array(rows));
    }
    if let Some(rot) = &args.rotation {
        let parts: Vec<&str> = rot.split(',').collect();
        if parts.len() != 4 {
            return Err(format!("--rotation expects 'alpha,beta,num,den', got '{rot}'"));
        }
        let alpha: usize = parts[0].trim().parse().map_err(|_| "bad alpha".to_string())?;
        let beta: usize = parts[1].trim().parse().map_err(|_| "bad beta".to_string())?;
        let num: i64 = parts[2].trim().parse().map_err(|_| "bad numerator".to_string())?;
        let den: i64 = parts[3].trim().parse().map_err(|_| "bad denominator".to_string())?;
        let elem = planar_cover_exact(rep, alpha, beta, num, den).map_err(|e| e.to_string())?;
        lines.push(format!("Lambda_R({num}/{den} pi; {alpha},{beta}) = {elem}"));
        out.insert(
            "rotation".into(),
            json!({"element": elem.to_string(), "mask": elem.mask}),
        );
    }
    emit(session, &Value::Object(out), || {
        for l in lines {
            println!("{l}");
        }
    });
    Ok(())
}

fn conj_entry(rep: &GammaRep, sign: SimilaritySign, hermitian: bool) -> Value {
    let r = if hermitian {
        hermitian_similarity(rep, sign)
    } else {
        charge_conj(rep, sign)
    };
    json!({
        "exists": r.exists,
        "expr": r.expr,
        "mask": r.mask,
        "mm_star": r.mm_star,
    })
}

fn conj_cmd(session: &Session, what: &str) -> Result<(), String> {
    let rep = &session.rep;
    let mut out = serde_json::Map::new();
    let mut lines = vec![];
    let all = what == "all";
    if all || what == "c" {
        for sign in [SimilaritySign::Plus, SimilaritySign::Minus] {
            let r = charge_conj(rep, sign);
            let tag = if sign == SimilaritySign::Plus { "C+" } else { "C-" };
            if r.exists {
                lines.push(format!(
                    "{tag} = {} with MM* = {:+}",
                    r.expr.clone().unwrap_or_default(),
                    r.mm_star.unwrap_or_default()
                ));
            } else {
                lines.push(format!("{tag}: none"));
            }
            out.insert(tag.to_string(), conj_entry(rep, sign, false));
        }
    }
    if all || what == "h" {
        for sign in [SimilaritySign::Plus, SimilaritySign::Minus] {
            let r = hermitian_similarity(rep, sign);
            let tag = if sign == SimilaritySign::Plus { "H+" } else { "H-" };
            if r.exists {
                lines.push(format!("{tag} = {}", r.expr.clone().unwrap_or_default()));
            } else {
                lines.push(format!("{tag}: none"));
            }
            out.insert(tag.to_string(), conj_entry(rep, sign, true));
        }
        if (rep.d()) % 2 == 1 {
            let (h, c) = odd_conj_choice(rep.signature.plus, rep.signature.minus);
            lines.push(format!("closed form: H{:?}, C{:?}", h, c));
            out.insert("odd_choice".into(), json!({"h": format!("{h:?}"), "c": format!("{c:?}")}));
        }
    }
    if all || what == "majorana" {
        let (verdict, eps) = majorana_parity_test(rep).map_err(|e| e.to_string())?;
        lines.push(format!("Majorana parity: {verdict:?} (epsilon = {eps:+})"));
        out.insert(
            "majorana".into(),
            json!({"verdict": format!("{verdict:?}"), "epsilon": eps}),
        );
    }
    if all || what == "kramers" {
        let k = kramers_check(rep).map_err(|e| e.to_string())?;
        lines.push(format!("A_T A_T* = {}", k.compact()));
        out.insert("kramers".into(), json!(k.compact()));
    }
    if all || what == "cpt" {
        let r = cpt_composite(rep).map_err(|e| e.to_string())?;
        lines.push(format!(
            "CPT = ({}) * Gamma_1..Gamma_d, Lorentz det {}",
            r.scalar.compact(), r.lorentz_det
        ));
        out.insert(
            "cpt".into(),
            json!({"scalar": r.scalar.compact(), "lorentz_det": r.lorentz_det.to_string()}),
        );
    }
    if all || what == "adjoint" {
        let table = adjoint_sign_table(rep).map_err(|e| e.to_string())?;
        for (label, sign) in &table {
            lines.push(format!("a(Lambda_{label}) = {sign:+}"));
        }
        out.insert(
            "adjoint".into(),
            Value::Array(
                table
                    .iter()
                    .map(|(l, s)| json!({"label": l, "sign": s}))
                    .collect(),
            ),
        );
    }
    if lines.is_empty() {
        return Err(format!("unknown conj selector '{what}'"));
    }
    emit(session, &Value::Object(out), || {
        for l in lines {
            println!("{l}");
        }
    });
    Ok(())
}

fn trace_cmd(
    session: &Session,
    positions: Option<String>,
    sign_law: Option<usize>,
) -> Result<(), String> {
    let mut out = serde_json::Map::new();
    let mut lines = vec![];
    if let Some(text) = positions {
        let pos: Vec<usize> = text
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad position '{p}'")))
            .collect::<Result<_, String>>()?;
        for &p in &pos {
            if p >= session.rep.d() {
                return Err(format!("position {p} out of range"));
            }
        }
        let t = trace_product(&session.rep, &pos);
        lines.push(format!("tr = {t}"));
        out.insert("trace".into(), json!(t.to_string()));
    }
    if let Some(n) = sign_law {
        let s = trace_sign_law(n).map_err(|e| e.to_string())?;
        lines.push(format!("hat/standard ratio for {n} gammas: {s:+}"));
        out.insert("sign_law".into(), json!(s));
    }
    if lines.is_empty() {
        return Err("nothing to do: pass --positions and/or --sign-law".to_string());
    }
    emit(session, &Value::Object(out), || {
        for l in lines {
            println!("{l}");
        }
    });
    Ok(())
}

fn spinsum_cmd(session: &Session, p: &str, mass: &str, kind: &str) -> Result<(), String> {
    let rep = &session.rep;
    let comps = scalars(p)?;
    let mass = GaussScalar::from_str(mass).map_err(|e| format!("bad mass: {e}"))?;
    let mom = FourMomentum::on_shell(&rep.metric, comps, mass).map_err(|e| e.to_string())?;
    let kind = match kind {
        "u" | "U" => SpinorKind::U,
        "v" | "V" => SpinorKind::V,
        other => return Err(format!("--kind must be u or v, got '{other}'")),
    };
    let sum = spin_sum(rep, &mom, kind).map_err(|e| e.to_string())?;
    let closed = spin_sum_closed(rep, &mom, kind).map_err(|e| e.to_string())?;
    let matches = sum == closed;
    emit(
        session,
        &json!({"kind": format!("{kind:?}"), "spin_sum": matrix_value(&sum),
                "matches_closed_form": matches}),
        || {
            println!("spin sum ({kind:?}):");
            print_matrix(&sum);
            println!("matches closed form: {matches}");
        },
    );
    Ok(())
}

fn sigma_cmd(session: &Session, args: &SigmaArgs) -> Result<(), String> {
    let hyp = match args.hypothesis.as_str() {
        "plus" => ParityHypothesis::Plus,
        "minus" => ParityHypothesis::Minus,
        other => return Err(format!("--hypothesis must be plus or minus, got '{other}'")),
    };
    let input = SigmaDecayInput {
        q_lambda: scalars(&args.q)?,
        p_sigma: scalars(&args.p)?,
        k_photon: scalars(&args.k)?,
        k1_positron: scalars(&args.k1)?,
        k2_electron: scalars(&args.k2)?,
        m_sigma: GaussScalar::from_str(&args.m_sigma).map_err(|e| e.to_string())?,
        m_lambda: GaussScalar::from_str(&args.m_lambda).map_err(|e| e.to_string())?,
        m_electron: GaussScalar::from_str(&args.m_e).map_err(|e| e.to_string())?,
    };
    let std_rep = GammaRep::dirac13();
    let hat_rep = GammaRep::hat_from13(GammaRep::dirac13());
    let s = sigma_decay_trace(&std_rep, &input, hyp).map_err(|e| e.to_string())?;
    let h = sigma_decay_trace(&hat_rep, &input, hyp).map_err(|e| e.to_string())?;
    let ratio = if s.is_zero() {
        None
    } else {
        Some((h.clone() / s.clone()).compact())
    };
    emit(
        session,
        &json!({"hypothesis": args.hypothesis, "standard": s.compact(),
                "hat": h.compact(), "ratio": ratio}),
        || {
            println!("standard: {}", s.compact());
            println!("hat:      {}", h.compact());
            match ratio {
                Some(r) => println!("ratio hat/standard: {r}"),
                None => println!("ratio hat/standard: undefined (zero)"),
            }
        },
    );
    Ok(())
}

fn phases_cmd(session: &Session, args: &PhasesArgs) -> Result<(), String> {
    let mut out = serde_json::Map::new();
    let mut lines = vec![];
    if let Some(text) = &args.pion {
        let v = scalars(text)?;
        if v.len() != 2 {
            return Err("--pion expects 'eta_p,eta_n'".to_string());
        }
        let eta = pion_intrinsic_parity(&v[0], &v[1]).map_err(|e| e.to_string())?;
        lines.push(format!("eta_pi = {}", eta.compact()));
        out.insert("eta_pi".into(), json!(eta.compact()));
    }
    if let Some(j) = args.pion_channels {
        let channels = pion_final_state(j);
        lines.push(format!("open (l,s) channels for j={j}: {channels:?}"));
        out.insert(
            "pion_channels".into(),
            json!(channels.iter().map(|&(l, s)| json!([l, s])).collect::<Vec<_>>()),
        );
    }
    if let Some(text) = &args.positronium {
        let parts: Vec<u32> = text
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad quantum number '{p}'")))
            .collect::<Result<_, String>>()?;
        if parts.len() != 2 {
            return Err("--positronium expects 'l,s'".to_string());
        }
        let report = positronium_phases(parts[0], parts[1], &-GaussScalar::one(), &GaussScalar::one());
        lines.push(format!(
            "P = {}, C = {}, minimal photons: {:?}",
            report.p_factor.compact(),
            report.c_factor.compact(),
            report.min_photons
        ));
        out.insert("positronium".into(), serde_json::to_value(&report).expect("serializable"));
    }
    if let Some(text) = &args.ledger {
        let v = scalars(text)?;
        if v.len() != 5 {
            return Err("--ledger expects 'eta_a,eta_b,xi_a,xi_b,lambda'".to_string());
        }
        let ledger = PhaseLedger {
            eta_a: v[0].clone(),
            eta_b: v[1].clone(),
            xi_a: v[2].clone(),
            xi_b: v[3].clone(),
            lambda: v[4].clone(),
            majorana: args.majorana,
        };
        let report = ledger_constraints(&ledger).map_err(|e| e.to_string())?;
        lines.push(format!(
            "fermion pair ok: {}, charge pair ok: {}, majorana ok: {:?}, eta/lambda = {} (real: {})",
            report.fermion_pair_ok,
            report.charge_pair_ok,
            report.majorana_ok,
            report.eta_over_lambda.compact(),
            report.eta_over_lambda_real
        ));
        out.insert("ledger".into(), serde_json::to_value(&report).expect("serializable"));
    }
    if lines.is_empty() {
        return Err("nothing to do: pass --pion, --pion-channels, --positronium or --ledger".to_string());
    }
    emit(session, &Value::Object(out), || {
        for l in lines {
            println!("{l}");
        }
    });
    Ok(())
}

fn klein_cmd(session: &Session, args: &KleinArgs) -> Result<(), String> {
    let pin_kind = match args.pin.as_str() {
        "13" => PinKind::Pin13,
        "31" => PinKind::Pin31,
        other => return Err(format!("--pin must be 13 or 31, got '{other}'")),
    };
    let cfg = KleinConfig {
        pin_kind,
        a: args.a,
        b: args.b,
        n_max: args.n,
        tolerance: args.tolerance,
        x: [0.0, 0.0, 0.0, args.x3],
        x_prime: [0.0, 0.0, 0.0, args.x3],
    };
    let table = current_table(&cfg).map_err(|e| e.to_string())?;
    let verdicts = current_verdicts(&table, cfg.tolerance);
    match session.format {
        OutputFormat::Json => {
            let rows: Vec<Value> = table
                .iter()
                .zip(&verdicts)
                .map(|((label, v), (_, nz))| {
                    json!({"bilinear": label, "value": [v.re, v.im], "nonvanishing": nz})
                })
                .collect();
            let gv = g_ren(&cfg).map_err(|e| e.to_string())?;
            let value = json!({
                "pin": args.pin, "a": args.a, "b": args.b, "x3": args.x3, "n": args.n,
                "tolerance": args.tolerance,
                "g_ren": {"scalar": [gv.scalar_part.re, gv.scalar_part.im],
                           "matrix_coefficient": [gv.matrix_part_coefficient.re,
                                                   gv.matrix_part_coefficient.im],
                           "tail_estimate": gv.tail_estimate},
                "currents": rows,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("bilinear,re,im,nonvanishing");
            for ((label, v), (_, nz)) in table.iter().zip(&verdicts) {
                println!("{label},{:e},{:e},{nz}", v.re, v.im);
            }
        }
        OutputFormat::Text => {
            for axis in 0..4 {
                let d = d_g_ren(&cfg, axis).map_err(|e| e.to_string())?;
                println!(
                    "d_{axis} G_ren: scalar {:+.3e}{:+.3e}i  matrix {:+.3e}{:+.3e}i",
                    d.scalar_part.re, d.scalar_part.im,
                    d.matrix_part_coefficient.re, d.matrix_part_coefficient.im
                );
            }
            println!("bilinear currents (tolerance {:.1e} relative):", args.tolerance);
            for ((label, v), (_, nz)) in table.iter().zip(&verdicts) {
                println!(
                    "  {:6} {:+.6e}{:+.6e}i  {}",
                    label,
                    v.re,
                    v.im,
                    if *nz { "NONVANISHING" } else { "vanishes" }
                );
            }
        }
    }
    Ok(())
}

fn eval_cmd(session: &Session, text: &str) -> Result<(), String> {
    let ast = parse_expr(text).map_err(|e| e.to_string())?;
    let ctx = EvalContext { rep: &session.rep };
    let value = ctx.eval(&ast)?;
    let canonical = print_expr(&ast);
    let symbolic = ctx.monomial_annotation(&value);
    emit(
        session,
        &json!({"input": text, "canonical": canonical, "symbolic": symbolic,
                "value": matrix_value(&value)}),
        || {
            println!("parsed: {canonical}");
            if let Some(s) = &symbolic {
                println!("symbolic: {s}");
            }
            print_matrix(&value);
        },
    );
    Ok(())
}

fn golden_tables() -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let reps = [
        ("Pin(1,3)", GammaRep::dirac13()),
        ("Pin(3,1)", GammaRep::hat_from13(GammaRep::dirac13())),
    ];

    writeln!(out, "== named covers and squares ==").unwrap();
    for (name, rep) in &reps {
        for n in named_elements(rep).expect("named elements") {
            writeln!(
                out,
                "{name}  Lambda_{:5} = ±({})   square {}I",
                n.label,
                n.pair.plus,
                if n.square > 0 { "+" } else { "-" }
            )
            .unwrap();
        }
    }

    writeln!(out, "\n== double cover groups ==").unwrap();
    for (name, rep) in &reps {
        for (choice, tag) in [(ParityChoice::P1, "P(1)"), (ParityChoice::P3, "P(3)")] {
            let c = cover_group_classify(rep, choice).expect("classify");
            writeln!(
                out,
                "{name} with {tag}: (a,b,c)=({:+},{:+},{:+}) commute {:+} -> {} ({}cliffordian)",
                c.a,
                c.b,
                c.c,
                c.commute,
                c.group_name,
                if c.cliffordian { "" } else { "non-" }
            )
            .unwrap();
        }
    }
    for (t, s) in [(1usize, 0usize), (0, 1)] {
        let rep = GammaRep::small(t, s).expect("small rep");
        let gen = rep.matrices[0].clone();
        let mut elems = vec![ExactMatrix::identity(rep.dim())];
        let mut cur = gen.clone();
        while !elems.contains(&cur) {
            elems.push(cur.clone());
            cur = &cur * &gen;
        }
        let minus = ExactMatrix::identity(rep.dim()).scale(&-GaussScalar::one());
        if !elems.contains(&minus) {
            let more: Vec<ExactMatrix> = elems.iter().map(|e| e.scale(&-GaussScalar::one())).collect();
            elems.extend(more);
        }
        let (order, abelian, orders) = group_structure(&elems);
        writeln!(
            out,
            "Pin({t},{s}): order {order}, abelian {abelian}, element orders {orders:?}"
        )
        .unwrap();
    }

    writeln!(out, "\n== mod-8 classification, m+n <= 8 ==").unwrap();
    for total in 1..=8u64 {
        for m in 0..=total {
            let n = total - m;
            write!(out, "C({m},{n})={}  ", classify(m, n)).unwrap();
        }
        writeln!(out).unwrap();
    }

    writeln!(out, "\n== conjugation ==").unwrap();
    for (name, rep) in &reps {
        let c = charge_conj(rep, canonical_c_sign(rep));
        let (verdict, eps) = majorana_parity_test(rep).expect("majorana");
        let kramers = kramers_check(rep).expect("kramers");
        let cpt = cpt_composite(rep).expect("cpt");
        writeln!(
            out,
            "{name}: C = {} (MM* {:+}), Majorana {verdict:?} (eps {eps:+}), A_T A_T* = {}, CPT scalar {}",
            c.expr.unwrap_or_default(),
            c.mm_star.unwrap_or_default(),
            kramers.compact(),
            cpt.scalar.compact()
        )
        .unwrap();
        for (label, sign) in adjoint_sign_table(rep).expect("adjoint") {
            writeln!(out, "{name}: a(Lambda_{label}) = {sign:+}").unwrap();
        }
    }
    writeln!(out, "\n== odd-signature H/C choices ==").unwrap();
    for (t, s) in [(1usize, 2usize), (2, 1), (3, 0), (0, 3)] {
        let (h, c) = odd_conj_choice(t, s);
        writeln!(out, "C({t},{s}): H{h:?}, C{c:?}").unwrap();
    }

    writeln!(out, "\n== trace sign law ==").unwrap();
    for n in [2usize, 4, 6, 8] {
        writeln!(out, "{n} gammas: {:+}", trace_sign_law(n).expect("even")).unwrap();
    }

    writeln!(out, "\n== surjectivity and center (odd d) ==").unwrap();
    for (t, s) in [(1usize, 2usize), (2, 1)] {
        let rep = GammaRep::small(t, s).expect("small rep");
        let reaches = pinor_core::cover::surjectivity_check(&rep);
        let center: Vec<u32> = pinor_core::cover::center(&rep);
        writeln!(out, "C({t},{s}): -I covered {reaches}, center masks {center:?}").unwrap();
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
