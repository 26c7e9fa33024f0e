//! Subcommand dispatch. Every command builds a [`Report`] and `run` decides
//! between text and JSON rendering; errors map to exit codes 1 (domain),
//! 2 (capacity), 3 (syntax).

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::time::Instant;

use crate::abc::{
    abc_quality, check_theorem4_conditions, check_theorem5_conditions,
    check_theorem6_conditions, granville_scan, is_powerful, powerful_value_scan, radical,
    FactoredEquation, Sign,
};
use crate::classifier::{
    classify_abc, classify_general_equation, classify_product_abc, classify_product_equation,
    ProductForm, Verdict, VerdictTag, Witness,
};
use crate::cli::parse::{parse_factored_product, parse_poly, parse_product_form, ParseError};
use crate::cli::report::{condition_report_json, condition_report_text, Report};
use crate::error::{Error, Result};
use crate::polynomial::IntPoly;
use crate::search::{
    complete_numbers_scan, enumerate_solutions, is_complete_composite, minimal_positive_shift,
    xy_gap_stats,
};
use crate::shift::find_shift_witness;

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Finiteness criteria and brute-force oracles for (y+q1)...(y+qm) = f(x) and f(x) = g(y)"
)]
struct Cli {
    /// Emit the stable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an equation against the finiteness criteria
    Classify(ClassifyArgs),
    /// Enumerate all solutions of f(x) = g(y) with |x|, |y| <= box
    Enumerate(EnumerateArgs),
    /// Look for the shift identity g(x + c) = f(x)
    ShiftTest(ShiftTestArgs),
    /// Complete-composite analysis of values of monic f
    #[command(subcommand)]
    Composite(CompositeCmd),
    /// Factorization utilities, abc condition checks, and scans
    #[command(subcommand)]
    Abc(AbcCmd),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Product form: comma list of shifts ("0,1") or atoms ("(y)(y+2)")
    #[arg(long, allow_hyphen_values = true)]
    product: Option<String>,
    /// Right-hand polynomial f in x
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Left-hand polynomial g in y (general mode)
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Use the abc-conditional criteria
    #[arg(long)]
    abc: bool,
    /// Factored left product of f, e.g. "(x)^3*(x+1)^3" (abc mode)
    #[arg(long)]
    left: Option<String>,
    /// Factored right product of f; omitted means the constant 1 (abc mode)
    #[arg(long)]
    right: Option<String>,
    /// Sign joining the two products of f: plus or minus (abc mode)
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// g as factored powers, e.g. "(y)^4" (abc mode)
    #[arg(long)]
    gpow: Option<String>,
    /// Factored form of f for the powered-f orientation (product abc mode)
    #[arg(long)]
    f_factored: Option<String>,
    /// Also run the enumeration oracle at this box and report agreement
    #[arg(long)]
    check: Option<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Polynomial f in x
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    /// Polynomial g in y
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    /// Box bound B: search |x|, |y| <= B
    #[arg(long = "box")]
    bound: u64,
}

#[derive(Args)]
struct ShiftTestArgs {
    /// Polynomial f in x
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    /// Polynomial g in y
    #[arg(long, allow_hyphen_values = true)]
    g: String,
}

#[derive(Subcommand)]
enum CompositeCmd {
    /// Decide whether f(n) splits into deg f factors, each >= n + 1
    Decide {
        /// Monic polynomial f in x with nonnegative coefficients
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Argument n >= 1
        #[arg(long)]
        n: u64,
    },
    /// Scan n = 1..=n-max for complete arguments and report the regime
    Scan {
        /// Monic polynomial f in x with nonnegative coefficients
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        n_max: u64,
    },
    /// Least h >= 0 making every coefficient of f(x + h) positive
    MinShift {
        /// Monic polynomial f in x
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
}

#[derive(Args)]
struct EquationArgs {
    /// Factored left product of f, e.g. "(x)^3*(x+1)^3"
    #[arg(long)]
    left: String,
    /// Factored right product of f; omitted means the constant 1
    #[arg(long)]
    right: Option<String>,
    /// Sign joining the two products: plus or minus
    #[arg(long, default_value = "plus", allow_hyphen_values = true)]
    sign: String,
    /// g as factored powers, e.g. "(y)^7"
    #[arg(long)]
    gpow: String,
}

#[derive(Subcommand)]
enum AbcCmd {
    /// Product of the distinct primes dividing n
    Radical {
        #[arg(allow_negative_numbers = true)]
        n: String,
    },
    /// Whether p | n implies p^2 | n
    Powerful {
        #[arg(allow_negative_numbers = true)]
        n: String,
    },
    /// abc quality log c / log rad(abc) for coprime a + b = c
    Quality {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
    },
    /// Scan m in [lo, hi] for powerful |g(m)|
    PowerfulScan {
        /// Polynomial g in x
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        hi: i64,
    },
    /// Running maxima of log q / log m for the largest q with q^2 | g(m)
    GranvilleScan {
        /// Separable polynomial g in x
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        m_max: u64,
    },
    /// Check the low-g criterion's conditions (deg g < deg f)
    CheckThm4(EquationArgs),
    /// Check the high-g criterion's conditions (deg g > deg f)
    CheckThm5(EquationArgs),
    /// Check the separable-vs-powered criterion's conditions
    CheckThm6 {
        /// Polynomial f in x
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// g as factored powers, e.g. "(y)^4"
        #[arg(long)]
        gpow: String,
    },
}

/// Parse argv, execute, print the report, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.json;
    let start = Instant::now();
    match execute(cli.command) {
        Ok(mut report) => {
            report.timing_ms = start.elapsed().as_millis() as u64;
            if json {
                println!("{}", report.to_json_pretty());
            } else {
                print!("{}", report.render_text());
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<Report> {
    match command {
        Command::Classify(args) => cmd_classify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::ShiftTest(args) => cmd_shift_test(args),
        Command::Composite(cmd) => cmd_composite(cmd),
        Command::Abc(cmd) => cmd_abc(cmd),
    }
}

fn parse_bigint(text: &str, what: &str) -> Result<BigInt> {
    text.trim().parse::<BigInt>().map_err(|_| {
        Error::Syntax(ParseError {
            pos: 0,
            message: format!("{what} must be an integer, got '{text}'"),
        })
    })
}

fn parse_sign(text: &str) -> Result<Sign> {
    match text {
        "plus" | "+" => Ok(Sign::Plus),
        "minus" | "-" => Ok(Sign::Minus),
        other => Err(Error::domain(format!(
            "sign must be 'plus' or 'minus', got '{other}'"
        ))),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<Report> {
    let mut report = Report::new("classify");
    if let Some(b) = args.check {
        report.input("check", b.to_string());
    }

    let (verdict, oracle_pair): (Verdict, (IntPoly, IntPoly)) = if args.abc {
        if let Some(product) = &args.product {
            let f_text = args.f.as_deref().ok_or_else(|| {
                Error::domain("abc classification of a product form needs --f")
            })?;
            report.input("product", product);
            report.input("f", f_text);
            let pf = ProductForm::new(parse_product_form(product)?)?;
            let f = parse_poly(f_text, "x")?;
            let f_parts = match &args.f_factored {
                Some(text) => {
                    report.input("f-factored", text);
                    Some(parse_factored_product(text, "x")?)
                }
                None => None,
            };
            report.line(format!("equation: {pf} = {}", f.to_string_var("x")));
            let v = classify_product_abc(&pf, &f, f_parts.as_deref())?;
            let g = pf.expand();
            (v, (f, g))
        } else {
            let left_text = args.left.as_deref().ok_or_else(|| {
                Error::domain(
                    "abc classification needs --left and --gpow (or --product and --f)",
                )
            })?;
            let gpow_text = args
                .gpow
                .as_deref()
                .ok_or_else(|| Error::domain("abc classification needs --gpow"))?;
            report.input("left", left_text);
            report.input("gpow", gpow_text);
            let left = parse_factored_product(left_text, "x")?;
            let right = match &args.right {
                Some(text) => {
                    report.input("right", text);
                    parse_factored_product(text, "x")?
                }
                None => Vec::new(),
            };
            let sign_text = args.sign.as_deref().unwrap_or("plus");
            report.input("sign", sign_text);
            let sign = parse_sign(sign_text)?;
            if args.right.is_none() {
                report.note("right product omitted: f = (left product) +/- 1");
            }
            let eq = FactoredEquation::new(left, right, sign, parse_factored_product(
                gpow_text, "y",
            )?)?;
            let (f, g) = (eq.f(), eq.g());
            report.line(format!(
                "equation: {} = {}",
                f.to_string_var("x"),
                g.to_string_var("y")
            ));
            let v = classify_abc(&eq)?;
            (v, (f, g))
        }
    } else if let Some(product) = &args.product {
        let f_text = args
            .f
            .as_deref()
            .ok_or_else(|| Error::domain("product classification needs --f"))?;
        report.input("product", product);
        report.input("f", f_text);
        let pf = ProductForm::new(parse_product_form(product)?)?;
        let f = parse_poly(f_text, "x")?;
        report.line(format!("equation: {pf} = {}", f.to_string_var("x")));
        let v = classify_product_equation(&pf, &f)?;
        let g = pf.expand();
        (v, (f, g))
    } else if let (Some(f_text), Some(g_text)) = (&args.f, &args.g) {
        report.input("f", f_text);
        report.input("g", g_text);
        let f = parse_poly(f_text, "x")?;
        let g = parse_poly(g_text, "y")?;
        report.line(format!(
            "equation: {} = {}",
            f.to_string_var("x"),
            g.to_string_var("y")
        ));
        let v = classify_general_equation(&f, &g)?;
        (v, (f, g))
    } else {
        return Err(Error::domain(
            "specify --product SHIFTS --f F, or --f F --g G, or --abc with --left/--gpow",
        ));
    };

    report.set_verdict(&verdict);
    if let Some(b) = args.check {
        oracle_check(&mut report, &verdict, &oracle_pair.0, &oracle_pair.1, b)?;
    }
    Ok(report)
}

/// Cross-check a verdict against box enumeration, as far as a finite box can
/// speak to it.
fn oracle_check(
    report: &mut Report,
    verdict: &Verdict,
    f: &IntPoly,
    g: &IntPoly,
    bound: u64,
) -> Result<()> {
    let set = enumerate_solutions(f, g, bound)?;
    match verdict.tag {
        VerdictTag::InfiniteWitness => {
            let Some(Witness::Shift(c)) = &verdict.witness else {
                return Ok(());
            };
            let on_line = set
                .solutions()
                .iter()
                .filter(|(x, y)| BigInt::from(*y) - BigInt::from(*x) == *c)
                .count() as u64;
            let expected = expected_line_count(c, bound);
            if on_line == expected && expected > 0 {
                report.note(format!(
                    "oracle agreement: {on_line} of {} box solutions lie on y = x + ({c}), \
                     matching the expected {expected} at box {bound}",
                    set.len()
                ));
            } else {
                report.note(format!(
                    "oracle disagreement: {on_line} solutions on y = x + ({c}) but \
                     {expected} expected at box {bound}"
                ));
            }
        }
        VerdictTag::FiniteUnconditional | VerdictTag::FiniteUnderABC => {
            let doubled = bound.checked_mul(2).ok_or_else(|| {
                Error::capacity("check box too large to double for stabilization")
            })?;
            let set2 = enumerate_solutions(f, g, doubled)?;
            let trend = if set.len() == set2.len() {
                "count stabilized"
            } else {
                "count still growing; box too small to observe stabilization"
            };
            report.note(format!(
                "oracle: {} solutions at box {bound}, {} at box {doubled} ({trend})",
                set.len(),
                set2.len()
            ));
        }
        VerdictTag::ShiftBoundedCriterion | VerdictTag::Unknown => {
            let stats = xy_gap_stats(&set);
            let gap = stats
                .max_gap
                .map(|m| m.to_string())
                .unwrap_or_else(|| "n/a (no solutions)".to_string());
            report.note(format!(
                "oracle: {} solutions at box {bound}; max |x - y| = {gap} (the criterion \
                 ties finiteness to boundedness of this gap)",
                set.len()
            ));
        }
    }
    Ok(())
}

/// Solutions of y = x + c inside the box: 2B + 1 - |c| when |c| <= 2B.
fn expected_line_count(c: &BigInt, bound: u64) -> u64 {
    let two_b = BigInt::from(bound) * 2;
    let abs_c = BigInt::from(c.magnitude().clone());
    if abs_c > two_b {
        0
    } else {
        u64::try_from(two_b - abs_c + 1).expect("fits: <= 2B + 1")
    }
}

const MAX_LISTED_SOLUTIONS: usize = 50;

fn cmd_enumerate(args: EnumerateArgs) -> Result<Report> {
    let mut report = Report::new("enumerate");
    report.input("f", &args.f);
    report.input("g", &args.g);
    report.input("box", args.bound.to_string());
    let f = parse_poly(&args.f, "x")?;
    let g = parse_poly(&args.g, "y")?;
    let set = enumerate_solutions(&f, &g, args.bound)?;
    let stats = xy_gap_stats(&set);

    report.line(format!(
        "{} solutions of {} with |x|, |y| <= {}",
        set.len(),
        set.equation(),
        args.bound
    ));
    for (x, y) in set.solutions().iter().take(MAX_LISTED_SOLUTIONS) {
        report.line(format!("  (x, y) = ({x}, {y})"));
    }
    if set.len() > MAX_LISTED_SOLUTIONS {
        report.line(format!(
            "  ... {} more (full list in --json output)",
            set.len() - MAX_LISTED_SOLUTIONS
        ));
    }
    if let Some(gap) = stats.max_gap {
        report.line(format!("max |x - y| over solutions: {gap}"));
    }

    let histogram: serde_json::Map<String, Value> = stats
        .histogram
        .iter()
        .map(|(gap, count)| (gap.to_string(), json!(count)))
        .collect();
    report.result = Some(json!({
        "bound": args.bound,
        "count": set.len(),
        "solutions": set
            .solutions()
            .iter()
            .map(|(x, y)| json!([x, y]))
            .collect::<Vec<_>>(),
        "max_gap": stats.max_gap,
        "gap_histogram": histogram,
    }));
    Ok(report)
}

fn cmd_shift_test(args: ShiftTestArgs) -> Result<Report> {
    let mut report = Report::new("shift-test");
    report.input("f", &args.f);
    report.input("g", &args.g);
    let f = parse_poly(&args.f, "x")?;
    let g = parse_poly(&args.g, "y")?;
    match find_shift_witness(&f, &g)? {
        Some(c) => {
            report.line(format!("shift witness: c = {c}"));
            report.note(format!(
                "g(x + ({c})) = f(x) identically, so (x, x + ({c})) solves f(x) = g(y) \
                 for every integer x"
            ));
            report.result = Some(json!({ "witness": c.to_string() }));
        }
        None => {
            report.line("no shift witness".to_string());
            report.note("no integer c satisfies g(x + c) = f(x) identically");
            report.result = Some(json!({ "witness": null }));
        }
    }
    Ok(report)
}

fn cmd_composite(cmd: CompositeCmd) -> Result<Report> {
    match cmd {
        CompositeCmd::Decide { f, n } => {
            let mut report = Report::new("composite decide");
            report.input("f", &f);
            report.input("n", n.to_string());
            let poly = parse_poly(&f, "x")?;
            match is_complete_composite(&poly, n)? {
                Some(w) => {
                    report.line(format!("complete: {w}"));
                    report.note(
                        "offsets are the lexicographically least admissible choice".to_string(),
                    );
                    report.result = Some(json!({
                        "n": n,
                        "complete": true,
                        "parts": w.parts.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                        "identity": w.to_string(),
                    }));
                }
                None => {
                    report.line(format!(
                        "not complete: f({n}) has no factorization into {} factors, \
                         each >= {}",
                        match poly.degree() {
                            crate::polynomial::Degree::Finite(d) => d,
                            _ => 0,
                        },
                        n + 1
                    ));
                    report.result = Some(json!({
                        "n": n,
                        "complete": false,
                        "parts": null,
                    }));
                }
            }
            Ok(report)
        }
        CompositeCmd::Scan { f, n_max } => {
            let mut report = Report::new("composite scan");
            report.input("f", &f);
            report.input("n-max", n_max.to_string());
            let poly = parse_poly(&f, "x")?;
            let scan = complete_numbers_scan(&poly, n_max)?;
            if scan.splits_structurally {
                report.note(
                    "structural regime: f splits into monic linear factors with positive \
                     constant terms, so every n >= 1 is complete by construction",
                );
            } else {
                report.note(
                    "sporadic regime: any hits come from incidental factorizations of f(n)",
                );
            }
            report.line(format!(
                "{} complete n in 1..={n_max}",
                scan.hits.len()
            ));
            let shown = scan.hits.iter().take(MAX_LISTED_SOLUTIONS);
            let listed: Vec<String> = shown.map(|n| n.to_string()).collect();
            if !listed.is_empty() {
                report.line(format!("  hits: {}{}", listed.join(", "), if scan.hits.len() > MAX_LISTED_SOLUTIONS { ", ..." } else { "" }));
            }
            report.result = Some(json!({
                "n_max": n_max,
                "hit_count": scan.hits.len(),
                "hits": scan.hits,
                "splits_structurally": scan.splits_structurally,
            }));
            Ok(report)
        }
        CompositeCmd::MinShift { f } => {
            let mut report = Report::new("composite min-shift");
            report.input("f", &f);
            let poly = parse_poly(&f, "x")?;
            let h = minimal_positive_shift(&poly)?;
            let shifted = poly.taylor_shift(&h);
            report.line(format!(
                "h = {h}: f(x + {h}) = {}",
                shifted.to_string_var("x")
            ));
            report.result = Some(json!({
                "h": h.to_string(),
                "shifted": shifted.to_string_var("x"),
            }));
            Ok(report)
        }
    }
}

fn cmd_abc(cmd: AbcCmd) -> Result<Report> {
    match cmd {
        AbcCmd::Radical { n } => {
            let mut report = Report::new("abc radical");
            report.input("n", &n);
            let value = parse_bigint(&n, "n")?;
            let r = radical(&value)?;
            report.line(format!("rad({value}) = {r}"));
            report.result = Some(json!({
                "n": value.to_string(),
                "radical": r.to_string(),
            }));
            Ok(report)
        }
        AbcCmd::Powerful { n } => {
            let mut report = Report::new("abc powerful");
            report.input("n", &n);
            let value = parse_bigint(&n, "n")?;
            let answer = is_powerful(&value)?;
            report.line(format!(
                "{value} is {}powerful",
                if answer { "" } else { "not " }
            ));
            report.result = Some(json!({
                "n": value.to_string(),
                "powerful": answer,
            }));
            Ok(report)
        }
        AbcCmd::Quality { a, b } => {
            let mut report = Report::new("abc quality");
            report.input("a", &a);
            report.input("b", &b);
            let a = parse_bigint(&a, "a")?;
            let b = parse_bigint(&b, "b")?;
            let q = abc_quality(&a, &b)?;
            let c = &a + &b;
            report.line(format!("q({a}, {b}) = {q}"));
            report.note(
                "quality = log c / log rad(abc), 50 fractional digits, rounded half up",
            );
            report.result = Some(json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "c": c.to_string(),
                "quality": q.to_decimal_string(),
            }));
            Ok(report)
        }
        AbcCmd::PowerfulScan { g, lo, hi } => {
            let mut report = Report::new("abc powerful-scan");
            report.input("g", &g);
            report.input("lo", lo.to_string());
            report.input("hi", hi.to_string());
            let poly = parse_poly(&g, "x")?;
            let scan = powerful_value_scan(&poly, lo, hi)?;
            for w in &scan.warnings {
                report.note(w.clone());
            }
            report.note(
                "stabilization is a heuristic: a hit-free tail in a finite scan proves \
                 nothing about larger |m|",
            );
            report.line(format!(
                "{} powerful values of |g(m)| for m in [{lo}, {hi}], {} zeros",
                scan.hits.len(),
                scan.zeros.len()
            ));
            let listed: Vec<String> = scan
                .hits
                .iter()
                .take(MAX_LISTED_SOLUTIONS)
                .map(|m| m.to_string())
                .collect();
            if !listed.is_empty() {
                report.line(format!(
                    "  m: {}{}",
                    listed.join(", "),
                    if scan.hits.len() > MAX_LISTED_SOLUTIONS { ", ..." } else { "" }
                ));
            }
            report.result = Some(json!({
                "lo": lo,
                "hi": hi,
                "hits": scan.hits,
                "zeros": scan.zeros,
                "hypothesis_met": scan.hypothesis_met,
            }));
            Ok(report)
        }
        AbcCmd::GranvilleScan { g, m_max } => {
            let mut report = Report::new("abc granville-scan");
            report.input("g", &g);
            report.input("m-max", m_max.to_string());
            let poly = parse_poly(&g, "x")?;
            let scan = granville_scan(&poly, m_max)?;
            report.note(
                "diagnostic only: running maxima of log q / log m for the largest q with \
                 q^2 | |g(m)|; the comparison constant is ineffective, so no verdict follows",
            );
            report.line(format!(
                "{} record rows over m = 2..={m_max} ({} zeros skipped)",
                scan.records.len(),
                scan.zeros.len()
            ));
            for row in &scan.records {
                report.line(format!(
                    "  m = {}, q = {}, log q / log m = {:.6}",
                    row.m, row.q, row.ratio
                ));
            }
            report.result = Some(json!({
                "m_max": m_max,
                "scanned": scan.scanned,
                "records": scan
                    .records
                    .iter()
                    .map(|r| json!({"m": r.m, "q": r.q, "ratio": r.ratio}))
                    .collect::<Vec<_>>(),
                "zeros": scan.zeros,
                "max_ratio": scan.max_ratio(),
            }));
            Ok(report)
        }
        AbcCmd::CheckThm4(args) => check_equation_conditions("abc check-thm4", args, 4),
        AbcCmd::CheckThm5(args) => check_equation_conditions("abc check-thm5", args, 5),
        AbcCmd::CheckThm6 { f, gpow } => {
            let mut report = Report::new("abc check-thm6");
            report.input("f", &f);
            report.input("gpow", &gpow);
            let poly = parse_poly(&f, "x")?;
            let parts = parse_factored_product(&gpow, "y")?;
            let conditions = check_theorem6_conditions(&poly, &parts)?;
            for line in condition_report_text(&conditions) {
                report.line(line);
            }
            report.result = Some(condition_report_json(&conditions));
            Ok(report)
        }
    }
}

fn check_equation_conditions(command: &str, args: EquationArgs, which: u8) -> Result<Report> {
    let mut report = Report::new(command);
    report.input("left", &args.left);
    if let Some(right) = &args.right {
        report.input("right", right);
    }
    report.input("sign", &args.sign);
    report.input("gpow", &args.gpow);
    let left = parse_factored_product(&args.left, "x")?;
    let right = match &args.right {
        Some(text) => parse_factored_product(text, "x")?,
        None => {
            report.note("right product omitted: f = (left product) +/- 1");
            Vec::new()
        }
    };
    let sign = parse_sign(&args.sign)?;
    let g_parts = parse_factored_product(&args.gpow, "y")?;
    let eq = FactoredEquation::new(left, right, sign, g_parts)?;
    report.line(format!("f = {}", eq.f().to_string_var("x")));
    let conditions = if which == 4 {
        check_theorem4_conditions(&eq)?
    } else {
        check_theorem5_conditions(&eq)?
    };
    for line in condition_report_text(&conditions) {
        report.line(line);
    }
    report.result = Some(condition_report_json(&conditions));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_ok(argv: &[&str]) -> Report {
        let mut full = vec!["dioph"];
        full.extend_from_slice(argv);
        let cli = Cli::try_parse_from(full).expect("argv parses");
        execute(cli.command).expect("command succeeds")
    }

    fn run_err(argv: &[&str]) -> Error {
        let mut full = vec!["dioph"];
        full.extend_from_slice(argv);
        let cli = Cli::try_parse_from(full).expect("argv parses");
        execute(cli.command).expect_err("command fails")
    }

    #[test]
    fn classify_product_fixture() {
        let r = parse_ok(&["classify", "--product", "0,1", "--f", "x^2+1"]);
        assert_eq!(r.verdict.as_deref(), Some("FiniteUnconditional"));
        assert_eq!(r.theorem.as_deref(), Some("Thm 1.2"));
    }

    #[test]
    fn classify_general_and_check() {
        let r = parse_ok(&["classify", "--f", "x^2-1", "--g", "y^2+2*y", "--check", "50"]);
        assert_eq!(r.verdict.as_deref(), Some("InfiniteWitness"));
        assert!(r
            .diagnostics
            .iter()
            .any(|d| d.contains("oracle agreement")), "{:?}", r.diagnostics);
    }

    #[test]
    fn classify_abc_modes() {
        let r = parse_ok(&[
            "classify", "--abc", "--left", "(x^3+x)", "--gpow", "(y)^4",
        ]);
        assert_eq!(r.verdict.as_deref(), Some("FiniteUnderABC"));
        assert_eq!(r.theorem.as_deref(), Some("Thm 6"));

        let r = parse_ok(&[
            "classify", "--abc", "--product", "(y+1)(y+1)(y+2)(y+2)", "--f", "x^5+x+1",
        ]);
        assert_eq!(r.theorem.as_deref(), Some("Cor 1.1(1)"));
    }

    #[test]
    fn enumerate_fixture() {
        let r = parse_ok(&["enumerate", "--f", "x^2+1", "--g", "y^2+y", "--box", "100"]);
        let result = r.result.unwrap();
        assert_eq!(result["count"], 4);
        assert_eq!(result["solutions"][0], json!([-1, -2]));
        assert_eq!(result["max_gap"], 3);
    }

    #[test]
    fn shift_test_both_ways() {
        let r = parse_ok(&["shift-test", "--f", "x^2-1", "--g", "y^2+2*y"]);
        assert_eq!(r.result.unwrap()["witness"], "-1");
        let r = parse_ok(&["shift-test", "--f", "x^2+1", "--g", "y^2"]);
        assert_eq!(r.result.unwrap()["witness"], Value::Null);
    }

    #[test]
    fn composite_commands() {
        let r = parse_ok(&["composite", "decide", "--f", "x^2+5*x+6", "--n", "1"]);
        let result = r.result.unwrap();
        assert_eq!(result["complete"], true);
        assert_eq!(result["parts"], json!(["1", "5"]));

        let r = parse_ok(&["composite", "scan", "--f", "x^2+4*x+3", "--n-max", "20"]);
        let result = r.result.unwrap();
        assert_eq!(result["hit_count"], 20);
        assert_eq!(result["splits_structurally"], true);

        let r = parse_ok(&["composite", "min-shift", "--f", "x^2-1"]);
        assert_eq!(r.result.unwrap()["h"], "2");
    }

    #[test]
    fn abc_commands() {
        let r = parse_ok(&["abc", "radical", "720"]);
        assert_eq!(r.result.unwrap()["radical"], "30");

        let r = parse_ok(&["abc", "powerful", "108"]);
        assert_eq!(r.result.unwrap()["powerful"], true);

        let r = parse_ok(&["abc", "quality", "1", "8"]);
        let q = r.result.unwrap()["quality"].as_str().unwrap().to_string();
        assert!(q.starts_with("1.2262943855309168"), "{q}");

        let r = parse_ok(&["abc", "check-thm6", "--f", "x^3+x+1", "--gpow", "(y)^4"]);
        assert_eq!(r.result.unwrap()["holds"], true);

        let r = parse_ok(&[
            "abc", "check-thm4", "--left", "(x)^9", "--right", "(x+1)^9", "--gpow", "(y)^7",
        ]);
        assert_eq!(r.result.unwrap()["holds"], true);
    }

    #[test]
    fn error_exit_codes() {
        // domain: non-monic f in product mode
        let e = run_err(&["classify", "--product", "0,1", "--f", "2*x^2+1"]);
        assert_eq!(e.exit_code(), 1);

        // capacity: box beyond the coordinate range
        let e = run_err(&["enumerate", "--f", "x^2", "--g", "y^2", "--box",
            "9223372036854775807"]);
        assert_eq!(e.exit_code(), 2);

        // syntax: negative exponent
        let e = run_err(&["classify", "--product", "0,1", "--f", "x^(-1)"]);
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn run_returns_exit_codes() {
        assert_eq!(run(["dioph", "abc", "radical", "720"]), 0);
        assert_eq!(run(["dioph", "abc", "radical", "seven"]), 3);
        assert_eq!(run(["dioph", "--help"]), 0);
        assert_eq!(run(["dioph", "no-such-command"]), 1);
    }

    #[test]
    fn leading_hyphen_values_parse() {
        // i64 flags take space-separated negative values
        let r = parse_ok(&[
            "abc", "powerful-scan", "--g", "x^3+x+1", "--lo", "-20", "--hi", "20",
        ]);
        assert_eq!(r.inputs["lo"], "-20");

        // expression flags accept a leading unary minus
        let r = parse_ok(&["enumerate", "--f", "-x^2+5", "--g", "y^2", "--box", "10"]);
        assert_eq!(r.result.as_ref().unwrap()["count"], 8);

        // negative shifts in a comma product form
        let r = parse_ok(&["classify", "--product", "-3,5", "--f", "x^2+2*x-14"]);
        assert_eq!(r.verdict.as_deref(), Some("FiniteUnconditional"));

        // bigint positionals may be negative
        let r = parse_ok(&["abc", "radical", "-6"]);
        assert_eq!(r.result.as_ref().unwrap()["radical"], "6");

        // bare "-" is a valid sign token
        let r = parse_ok(&[
            "abc", "check-thm4", "--left", "(x)^9", "--right", "(x+1)^9",
            "--sign", "-", "--gpow", "(y)^7",
        ]);
        assert_eq!(r.inputs["sign"], "-");
    }
}
