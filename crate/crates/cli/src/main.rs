//! Command-line front end: sharp-bound evaluation, the global maximizer,
//! the certification ledger, starlikeness radii, membership sampling, and
//! coefficient functionals.
//!
//! Exit codes: 0 success, 1 refuted/inconclusive verdicts, 2 usage errors,
//! 3 domain violations, 4 I/O failures.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use harmcert::certsuite::{
    builtin_claims, case4_compare, run_claims, ClaimOutcome, ClaimReport, ClaimSelection,
};
use harmcert::hankel::{
    branch_threshold, gamma_inv, gamma_log, h21_inv, inverse_coeffs, maximize_h21,
    proof_constants, sharp_bound, Branch, CoeffTriple, MaximizerConfig,
};
use harmcert::harmonic::{check_membership, ClassParams, HarmonicPolynomialMap, MembershipStatus};
use harmcert::hypergeom::{starlike_radius, AlphaParam};
use harmcert::polycert::Verdict;

#[derive(Parser)]
#[command(
    name = "harmcert",
    version,
    about = "Verification toolkit: sharp Hankel-determinant bounds, exact sign certification, and harmonic-family checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve for the starlikeness radius at the given parameters.
    Radius {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate the sharp second-Hankel bound and its branch.
    Bound {
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Brute-force maximize the determinant modulus over the parameter domain.
    Maximize {
        #[arg(long)]
        m: f64,
        #[arg(long, default_value_t = 512)]
        grid_p1: usize,
        #[arg(long, default_value_t = 256)]
        grid_rho: usize,
        #[arg(long, default_value_t = 512)]
        grid_phi: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run certification claims from the built-in ledger.
    Certify {
        /// Claim ids to run (repeatable).
        #[arg(long = "claim", conflicts_with = "all")]
        claims: Vec<String>,
        /// Run every claim in the ledger.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample the defining inequality of a harmonic map on the boundary.
    Membership {
        /// JSON file with {"a": [[re,im],..], "b": [[re,im],..]}, index 0 = n = 2.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        m: f64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coefficient functionals of an analytic map given a2, a3, a4.
    Hankel {
        #[arg(long, value_parser = parse_complex)]
        a2: Complex64,
        #[arg(long, value_parser = parse_complex)]
        a3: Complex64,
        #[arg(long, value_parser = parse_complex)]
        a4: Complex64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form analysis constants at the given m.
    Constants {
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full verification sweep and write CSV + JSON artifacts.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(msg: impl std::fmt::Display) -> Self {
        Self { code: 3, message: msg.to_string() }
    }

    fn io(msg: impl std::fmt::Display) -> Self {
        Self { code: 4, message: msg.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// 12 significant digits, stable across runs.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("bad imaginary part: {e}"))?;
    Ok(Complex64::new(re, im))
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(Failure::io),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(Failure::io)
}

fn run(cmd: Cmd) -> Result<u8, Failure> {
    match cmd {
        Cmd::Radius { alpha, m, out } => {
            let a = AlphaParam::new(alpha).map_err(Failure::domain)?;
            let sol = starlike_radius(a, m).map_err(Failure::domain)?;
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&sol).expect("serializable") + "\n",
                Format::Csv => format!(
                    "alpha,m,r1,residual,iterations\n{},{},{},{},{}\n",
                    sig12(alpha),
                    sig12(m),
                    sig12(sol.r1),
                    sig12(sol.residual),
                    sol.iterations
                ),
                Format::Table => format!(
                    "alpha       {}\nm           {}\nr1          {}\nresidual    {}\niterations  {}\n",
                    sig12(alpha),
                    sig12(m),
                    sig12(sol.r1),
                    sig12(sol.residual),
                    sol.iterations
                ),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Bound { m, out } => {
            let b = sharp_bound(m).map_err(Failure::domain)?;
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&b).expect("serializable") + "\n",
                Format::Csv => format!(
                    "m,branch,value\n{},{},{}\n",
                    sig12(m),
                    b.branch,
                    sig12(b.value)
                ),
                Format::Table => format!(
                    "m         {}\nbranch    {}\nvalue     {}\nextremal  {}\n",
                    sig12(m),
                    b.branch,
                    sig12(b.value),
                    b.extremal_description
                ),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Maximize { m, grid_p1, grid_rho, grid_phi, out } => {
            let cfg = MaximizerConfig { grid_p1, grid_rho, grid_phi };
            let got = maximize_h21(m, &cfg).map_err(Failure::domain)?;
            let bound = sharp_bound(m).map_err(Failure::domain)?;
            let text = match out.format {
                Format::Json => {
                    let v = serde_json::json!({
                        "m": m,
                        "max_abs": got.max_abs,
                        "argmax_p1": got.argmax_p1,
                        "argmax_p2_rho": got.argmax_rho,
                        "argmax_p2_phi": got.argmax_phi,
                        "bound_formula": branch_formula(bound.branch),
                        "bound_numeric": bound.value,
                        "gap": got.max_abs - bound.value,
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                Format::Csv => {
                    let mut s = String::from(
                        "m,bound_formula,bound_numeric,argmax_p1,argmax_p2_rho,argmax_p2_phi,gap\n",
                    );
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{},{}",
                        sig12(m),
                        branch_formula(bound.branch),
                        sig12(bound.value),
                        sig12(got.argmax_p1),
                        sig12(got.argmax_rho),
                        sig12(got.argmax_phi),
                        sig12(got.max_abs - bound.value)
                    );
                    s
                }
                Format::Table => format!(
                    "m              {}\nmax |H|        {}\nsharp bound    {}\ngap            {}\nargmax p1      {}\nargmax p2 rho  {}\nargmax p2 phi  {}\n",
                    sig12(m),
                    sig12(got.max_abs),
                    sig12(bound.value),
                    sig12(got.max_abs - bound.value),
                    sig12(got.argmax_p1),
                    sig12(got.argmax_rho),
                    sig12(got.argmax_phi)
                ),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Certify { claims, all, out } => {
            let selection = if all || claims.is_empty() {
                ClaimSelection::All
            } else {
                ClaimSelection::Ids(claims)
            };
            let reports = run_claims(&selection).map_err(Failure::domain)?;
            let text = match out.format {
                Format::Json => {
                    serde_json::to_string_pretty(&reports).expect("serializable") + "\n"
                }
                Format::Csv => claims_csv(&reports),
                Format::Table => claims_table(&reports),
            };
            emit(&out, &text)?;
            let all_ok = reports.iter().all(|r| r.verdict == Verdict::Certified);
            Ok(if all_ok { 0 } else { 1 })
        }
        Cmd::Membership { input, alpha, m, samples, out } => {
            let raw = std::fs::read_to_string(&input).map_err(Failure::io)?;
            let map: HarmonicPolynomialMap =
                serde_json::from_str(&raw).map_err(|e| Failure::domain(format!("bad input: {e}")))?;
            let params = ClassParams::new(alpha, m).map_err(Failure::domain)?;
            let verdict = check_membership(&map, &params, samples).map_err(Failure::domain)?;
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&verdict).expect("serializable") + "\n",
                Format::Csv => {
                    let mut s = String::from("status,max_value,witness_theta,exceedance\n");
                    let _ = writeln!(
                        s,
                        "{:?},{},{},{}",
                        verdict.status,
                        sig12(verdict.max_value),
                        verdict.witness_theta.map_or_else(String::new, sig12),
                        if verdict.status == MembershipStatus::Refuted {
                            sig12(verdict.max_value - m)
                        } else {
                            String::new()
                        }
                    );
                    s
                }
                Format::Table => {
                    let mut s = format!(
                        "status     {:?}\nmax value  {}\nbound m    {}\n",
                        verdict.status,
                        sig12(verdict.max_value),
                        sig12(m)
                    );
                    if let Some(theta) = verdict.witness_theta {
                        let _ = writeln!(s, "witness theta  {}", sig12(theta));
                        let _ = writeln!(s, "exceedance     {}", sig12(verdict.max_value - m));
                    }
                    s
                }
            };
            emit(&out, &text)?;
            Ok(if verdict.status == MembershipStatus::Refuted { 1 } else { 0 })
        }
        Cmd::Hankel { a2, a3, a4, out } => {
            let a = CoeffTriple::new(a2, a3, a4);
            let inv = inverse_coeffs(&a);
            let gl = gamma_log(&a);
            let gi = gamma_inv(&a);
            let h = h21_inv(&a);
            let text = match out.format {
                Format::Json => {
                    let pair = |c: Complex64| vec![c.re, c.im];
                    let v = serde_json::json!({
                        "inverse": { "A2": pair(inv.0), "A3": pair(inv.1), "A4": pair(inv.2) },
                        "log": { "g1": pair(gl.0), "g2": pair(gl.1), "g3": pair(gl.2) },
                        "log_inverse": { "G1": pair(gi.0), "G2": pair(gi.1), "G3": pair(gi.2) },
                        "h21": { "re": h.re, "im": h.im, "abs": h.norm() },
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                Format::Csv => {
                    let mut s = String::from("quantity,re,im\n");
                    for (name, c) in [
                        ("A2", inv.0),
                        ("A3", inv.1),
                        ("A4", inv.2),
                        ("gamma1", gl.0),
                        ("gamma2", gl.1),
                        ("gamma3", gl.2),
                        ("Gamma1", gi.0),
                        ("Gamma2", gi.1),
                        ("Gamma3", gi.2),
                        ("H21", h),
                    ] {
                        let _ = writeln!(s, "{name},{},{}", sig12(c.re), sig12(c.im));
                    }
                    s
                }
                Format::Table => {
                    let fmt = |c: Complex64| format!("{},{}", sig12(c.re), sig12(c.im));
                    format!(
                        "A2      {}\nA3      {}\nA4      {}\ngamma1  {}\ngamma2  {}\ngamma3  {}\nGamma1  {}\nGamma2  {}\nGamma3  {}\nH21     {}\n|H21|   {}\n",
                        fmt(inv.0),
                        fmt(inv.1),
                        fmt(inv.2),
                        fmt(gl.0),
                        fmt(gl.1),
                        fmt(gl.2),
                        fmt(gi.0),
                        fmt(gi.1),
                        fmt(gi.2),
                        fmt(h),
                        sig12(h.norm())
                    )
                }
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Constants { m, out } => {
            if !(m > 0.0) {
                return Err(Failure::domain(format!("m must be positive, got {m}")));
            }
            let pc = proof_constants(m);
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&pc).expect("serializable") + "\n",
                Format::Csv => {
                    let opt = |v: Option<f64>| v.map_or_else(String::new, sig12);
                    format!(
                        "m,t1,t2,t3,t4,y0,y1,y3,threshold,m1\n{},{},{},{},{},{},{},{},{},{}\n",
                        sig12(m),
                        opt(pc.t1),
                        opt(pc.t2),
                        opt(pc.t3),
                        opt(pc.t4),
                        opt(pc.y0),
                        opt(pc.y1),
                        opt(pc.y3),
                        sig12(pc.threshold),
                        sig12(pc.m1)
                    )
                }
                Format::Table => {
                    let opt = |v: Option<f64>| {
                        v.map_or_else(|| "absent (outside range)".to_string(), sig12)
                    };
                    format!(
                        "m          {}\nt1         {}\nt2         {}\nt3         {}\nt4         {}\ny0         {}\ny1         {}\ny3         {}\nthreshold  {}\nm1         {}\n",
                        sig12(m),
                        opt(pc.t1),
                        opt(pc.t2),
                        opt(pc.t3),
                        opt(pc.t4),
                        opt(pc.y0),
                        opt(pc.y1),
                        opt(pc.y3),
                        sig12(pc.threshold),
                        sig12(pc.m1)
                    )
                }
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Report { out } => report(&out),
    }
}

fn branch_formula(branch: Branch) -> &'static str {
    match branch {
        Branch::First => "m^2/36",
        Branch::Second => "(m^2/144)(39m^2-12m+2)",
    }
}

fn claim_value(report: &ClaimReport) -> String {
    match &report.outcome {
        ClaimOutcome::Sign(c) => c.witness.point.clone(),
        ClaimOutcome::BoxSign(c) => c
            .witness
            .as_ref()
            .map_or_else(String::new, |w| format!("{};{}", w.x, w.y)),
        ClaimOutcome::Root(b) => sig12(b.midpoint),
        ClaimOutcome::Failed { message } => message.clone(),
    }
}

fn claim_expected(report: &ClaimReport) -> String {
    match &report.outcome {
        ClaimOutcome::Sign(c) => c.expected.as_str().to_string(),
        ClaimOutcome::BoxSign(c) => c.expected.as_str().to_string(),
        ClaimOutcome::Root(_) => "bracketed root".to_string(),
        ClaimOutcome::Failed { .. } => String::new(),
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Certified => "CERTIFIED",
        Verdict::Refuted => "REFUTED",
        Verdict::Inconclusive => "INCONCLUSIVE",
    }
}

fn claims_csv(reports: &[ClaimReport]) -> String {
    let mut s = String::from("claim_id,value,expected,verdict\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            r.claim_id,
            claim_value(r),
            claim_expected(r),
            verdict_str(r.verdict)
        );
    }
    s
}

fn claims_table(reports: &[ClaimReport]) -> String {
    let mut s = format!("{:<16} {:<13} {:<14} witness/value\n", "claim", "verdict", "expected");
    for r in reports {
        let _ = writeln!(
            s,
            "{:<16} {:<13} {:<14} {}",
            r.claim_id,
            verdict_str(r.verdict),
            claim_expected(r),
            claim_value(r)
        );
    }
    let certified = reports.iter().filter(|r| r.verdict == Verdict::Certified).count();
    let _ = writeln!(s, "{certified}/{} certified", reports.len());
    s
}

/// The full verification sweep: maximizer vs sharp bound over the standard
/// m grid, the whole certification ledger, the radius solver grid, and the
/// bound comparison table.
fn report(dir: &Path) -> Result<u8, Failure> {
    std::fs::create_dir_all(dir).map_err(Failure::io)?;
    let mut ok = true;

    // Maximizer sweep.
    let grid = [0.1, 0.2, 0.3, 0.4, 0.427617, 0.45, 0.5, 0.6, 0.7213];
    let mut sweep =
        String::from("m,bound_formula,bound_numeric,argmax_p1,argmax_p2_rho,argmax_p2_phi,gap\n");
    for &m in &grid {
        let got = maximize_h21(m, &MaximizerConfig::default()).map_err(Failure::domain)?;
        let bound = sharp_bound(m).map_err(Failure::domain)?;
        let gap = got.max_abs - bound.value;
        ok &= gap.abs() <= 5e-4;
        let _ = writeln!(
            sweep,
            "{},{},{},{},{},{},{}",
            sig12(m),
            branch_formula(bound.branch),
            sig12(bound.value),
            sig12(got.argmax_p1),
            sig12(got.argmax_rho),
            sig12(got.argmax_phi),
            sig12(gap)
        );
    }
    write_file(&dir.join("maximize_sweep.csv"), &sweep)?;

    // Certification ledger.
    let reports = run_claims(&ClaimSelection::All).map_err(Failure::domain)?;
    ok &= reports.iter().all(|r| r.verdict == Verdict::Certified);
    write_file(
        &dir.join("claims.json"),
        &(serde_json::to_string_pretty(&reports).expect("serializable") + "\n"),
    )?;
    write_file(&dir.join("claims.csv"), &claims_csv(&reports))?;

    // Radius solver grid.
    let mut radius = String::from("alpha,m,r1,residual,iterations\n");
    for &alpha in &[0.25, 0.5, 0.75, 1.0] {
        for &m in &[0.25, 0.5, 1.0, 2.0] {
            let a = AlphaParam::new(alpha).map_err(Failure::domain)?;
            let sol = starlike_radius(a, m).map_err(Failure::domain)?;
            ok &= sol.residual.abs() < 1e-12;
            let _ = writeln!(
                radius,
                "{},{},{},{},{}",
                sig12(alpha),
                sig12(m),
                sig12(sol.r1),
                sig12(sol.residual),
                sol.iterations
            );
        }
    }
    write_file(&dir.join("radius.csv"), &radius)?;

    // Bound comparison across the certified band.
    let mut case4 = String::from(
        "m,p1_zero,p1_one,radical_small_p1,sqrt_delta,critical_point,xi_endpoint,maximum,sharp\n",
    );
    for k in 0..=20 {
        let m = 1.0 / 3.0 + (0.7213 - 1.0 / 3.0) * f64::from(k) / 20.0;
        let t = case4_compare(m).map_err(Failure::domain)?;
        ok &= (t.maximum - t.sharp).abs() < 1e-12;
        let cell = |label: &str| {
            t.entries
                .iter()
                .find(|e| e.label == label)
                .and_then(|e| e.value)
                .map_or_else(String::new, sig12)
        };
        let _ = writeln!(
            case4,
            "{},{},{},{},{},{},{},{},{}",
            sig12(m),
            cell("p1_zero"),
            cell("p1_one"),
            cell("radical_small_p1"),
            cell("sqrt_delta"),
            cell("critical_point"),
            cell("xi_endpoint"),
            sig12(t.maximum),
            sig12(t.sharp)
        );
    }
    write_file(&dir.join("case4.csv"), &case4)?;

    // Ledger inventory for reference.
    let ledger = builtin_claims();
    let mut inv = String::from("claim_id,note\n");
    for c in &ledger {
        let _ = writeln!(inv, "{},\"{}\"", c.id, c.note);
    }
    write_file(&dir.join("ledger.csv"), &inv)?;

    eprintln!(
        "report written to {} ({} claims, threshold {})",
        dir.display(),
        ledger.len(),
        sig12(branch_threshold())
    );
    Ok(if ok { 0 } else { 1 })
}
