use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use selmer_core::algebra::{q1_factorization, reducibility_screen, Quintuple};
use selmer_core::cusp::{parse_certificates, shipped_certificates, CuspCertificate, Variable};
use selmer_core::lattice::{asymptotic_constant, count_ij_total, davenport_demo, HeightRegion, SemialgebraicRegion, Sign};
use selmer_core::ranks::{
    combine, outside_default, stable_optimum, CombineMode, Parity, RankObjective, DEFAULT_RMAX, STABILITY_RMAX,
};
use selmer_core::rational::{parse_rational, to_decimal, to_f64, to_fraction, Rational};
use selmer_core::report::Report;
use selmer_core::roots::euler::DEFAULT_PRIME_BOUND;
use selmer_core::roots::families::density_families;
use selmer_core::roots::tables::parse_table;
use selmer_core::roots::{alpha_p, classify_row, d_p, minimalize, reduction_type, shipped_table, DensityTable, FamilyDensities};
use selmer_core::{suites, Error};

#[derive(Parser)]
#[command(name = "selmer", version, about = "Exact verification of 5-Selmer rank bounds")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory holding cusp_certificates.txt, table_p2.txt and table_p3.txt.
    #[arg(long, global = true, value_name = "DIR")]
    data: Option<PathBuf>,
    /// Size of the worker pool.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cusp certificates and the cuspidal partition.
    Cusp {
        #[command(subcommand)]
        command: CuspCommand,
    },
    /// Root-number densities.
    Roots {
        #[command(subcommand)]
        command: RootsCommand,
    },
    /// Rank-distribution programs.
    Ranks {
        #[command(subcommand)]
        command: RanksCommand,
    },
    /// Lattice-point counts.
    Count {
        #[command(subcommand)]
        command: CountCommand,
    },
    /// Pfaffian algebra.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Every acceptance suite.
    All,
}

#[derive(Subcommand)]
enum CuspCommand {
    /// Verify the ten monomial certificates.
    Verify {
        /// Certificate file; defaults to the shipped one (or the --data copy).
        #[arg(long, value_name = "FILE")]
        certificates: Option<PathBuf>,
    },
    /// Generate the cuspidal partition and check the cover.
    Partition,
}

#[derive(Subcommand)]
enum RootsCommand {
    /// Euler-product bounds and the family densities.
    Densities {
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
    },
    /// Minimal model, table rows and local signs of y² = x³ + Ax + B.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        /// Primes above 3 at which to report local data; defaults to those
        /// up to 1000 dividing the discriminant.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Reproduce the 2- and 3-adic tables and the local closed forms.
    VerifyTables,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    None,
    Equidistributed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    AverageRank,
    Rank01,
    Rank0,
}

#[derive(Subcommand)]
enum RanksCommand {
    /// Solve one rank program and combine it with the family density.
    Bounds {
        #[arg(long, default_value = "6", value_parser = rational)]
        avg_selmer: Rational,
        #[arg(long, value_enum, default_value_t = ParityArg::None)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::AverageRank)]
        objective: ObjectiveArg,
        #[arg(long, default_value = "0.5501", value_parser = rational)]
        family_density: Rational,
        #[arg(long, default_value_t = DEFAULT_RMAX)]
        rmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    #[value(name = "+")]
    Positive,
    #[value(name = "-")]
    Negative,
    #[value(name = "0")]
    Zero,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    Cube,
    Disk,
    Simplex,
}

#[derive(Subcommand)]
enum CountCommand {
    /// Integer pairs (I, J) of height below X by discriminant sign.
    Ij {
        #[arg(long, value_parser = rational)]
        x: Rational,
        #[arg(long, value_enum, default_value_t = SignArg::All, allow_hyphen_values = true)]
        sign: SignArg,
    },
    /// Lattice points in a dilated region against its volume.
    Davenport {
        #[arg(long, value_enum)]
        region: RegionArg,
        #[arg(long)]
        t: u64,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Randomized Pfaffian identities and the first factorization pattern.
    Pfaffian {
        #[arg(long, default_value_t = suites::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Reducibility screen of one quintuple.
    Screen {
        /// Coordinates that vanish; all others are set to 1.
        #[arg(long, value_delimiter = ',', conflicts_with = "coords")]
        zeros: Vec<Variable>,
        /// All 50 coordinates, comma separated, in the order a12..e45.
        #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
        coords: Vec<Rational>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Exact fraction plus a six-place decimal.
fn rat(r: &Rational) -> Value {
    json!({ "fraction": to_fraction(r), "decimal": to_decimal(r, 6) })
}

fn families_json(f: &FamilyDensities) -> Value {
    json!({
        "f1": rat(&f.f1), "f2": rat(&f.f2), "f3": rat(&f.f3), "f4": rat(&f.f4),
        "fplus": rat(&f.fplus), "fminus": rat(&f.fminus), "ftotal": rat(&f.ftotal),
    })
}

/// What a command produced: reports decide the exit code, `result` carries
/// command-specific data.
struct Outcome {
    reports: Vec<Report>,
    result: Value,
}

impl Outcome {
    fn reports(reports: Vec<Report>) -> Outcome {
        Outcome { reports, result: Value::Null }
    }
}

struct Data {
    dir: Option<PathBuf>,
}

impl Data {
    fn read(&self, name: &str) -> Result<Option<String>, Error> {
        let Some(dir) = &self.dir else { return Ok(None) };
        read_file(&dir.join(name)).map(Some)
    }

    fn certificates(&self, file: Option<&Path>) -> Result<Vec<CuspCertificate>, Error> {
        let text = match file {
            Some(f) => Some(read_file(f)?),
            None => self.read("cusp_certificates.txt")?,
        };
        match text {
            Some(t) => parse_certificates(&t),
            None => Ok(shipped_certificates()),
        }
    }

    fn table(&self, p: u64) -> Result<DensityTable, Error> {
        match self.read(&format!("table_p{p}.txt"))? {
            Some(t) => {
                let table = parse_table(&t)?;
                if table.p != p {
                    return Err(Error::Data(format!("table_p{p}.txt describes p = {}", table.p)));
                }
                Ok(table)
            }
            None => shipped_table(p),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
}

fn ranks_bounds(
    avg: &Rational,
    parity: ParityArg,
    objective: ObjectiveArg,
    mu: &Rational,
    rmax: usize,
) -> Result<Outcome, Error> {
    let parity = match parity {
        ParityArg::None => Parity::None,
        ParityArg::Equidistributed => Parity::Equidistributed,
    };
    let (objective, mode) = match objective {
        ObjectiveArg::AverageRank => (RankObjective::AverageRank, CombineMode::AvgRank),
        ObjectiveArg::Rank01 => (RankObjective::Rank01, CombineMode::Rank01),
        ObjectiveArg::Rank0 => (RankObjective::Rank0, CombineMode::Rank0),
    };
    let mut rmaxes: Vec<usize> = STABILITY_RMAX.iter().copied().filter(|&r| r < rmax).collect();
    rmaxes.push(rmax);
    let mut report = Report::new("rank program");
    let stable = stable_optimum(objective, avg, parity, &rmaxes);
    let sol = match stable {
        Ok(s) => {
            report.check("dual certificate verified", true, "certified", "certified", "rank programs");
            report.check(format!("optimum stable for rmax {rmaxes:?}"), true, "equal optima", "equal optima", "rank programs");
            s
        }
        Err(Error::Precondition(msg)) => {
            report.check(format!("optimum stable for rmax {rmaxes:?}"), false, "equal optima", msg, "rank programs");
            let program = selmer_core::ranks::RankProgram::new(objective, avg, parity, rmax);
            selmer_core::ranks::solve_program(&program)?
        }
        Err(e) => return Err(e),
    };
    let value = &sol.solution.value;
    let mut witness = sol.solution.x.clone();
    while witness.len() > 1 && witness.last().is_some_and(num_traits::Zero::is_zero) {
        witness.pop();
    }
    let inside = stable_optimum(objective, avg, Parity::Equidistributed, &[rmax])?.solution.value;
    let outside = outside_default(mode, avg)?;
    let combined = combine(mu, &inside, &outside)?;
    report.info("optimum", selmer_core::report::render(value), "rank programs");
    report.info("combined bound", selmer_core::report::render(&combined), "final combination");
    let result = json!({
        "objective": objective,
        "parity": parity,
        "avg_selmer": rat(avg),
        "rmax": rmax,
        "optimum": rat(value),
        "witness": witness.iter().map(rat).collect::<Vec<_>>(),
        "dual": sol.solution.dual.iter().map(rat).collect::<Vec<_>>(),
        "combination": {
            "family_density": rat(mu),
            "inside": rat(&inside),
            "outside": rat(&outside),
            "bound": rat(&combined),
        },
    });
    Ok(Outcome { reports: vec![report], result })
}

fn count_ij(x: &Rational, sign: SignArg) -> Result<Outcome, Error> {
    let region = HeightRegion::new(x)?;
    let c = count_ij_total(&region);
    let mut report = Report::new("invariant pair counts");
    let anchor = "counts of invariant pairs by height";
    report.check("partition identity", c.partition_holds(), "N+ + N- + N0 = box", format!("{} = {}", c.positive + c.negative + c.zero, c.total), anchor);
    let signs: &[Sign] = match sign {
        SignArg::Positive => &[Sign::Positive],
        SignArg::Negative => &[Sign::Negative],
        SignArg::Zero => &[Sign::Zero],
        SignArg::All => &[Sign::Positive, Sign::Negative, Sign::Zero],
    };
    let xf = region.as_f64();
    let mut counts = serde_json::Map::new();
    for &s in signs {
        let n = c.get(s);
        let key = serde_json::to_value(s).expect("sign serializes");
        let key = key.as_str().expect("string").to_string();
        report.info(format!("N{key}"), n.to_string(), anchor);
        let main = to_f64(&asymptotic_constant(s)) * xf.powf(5.0 / 6.0);
        counts.insert(key, json!({ "count": n.to_string(), "main_term": main }));
    }
    let result = json!({ "x": rat(x), "counts": counts, "total": c.total.to_string() });
    Ok(Outcome { reports: vec![report], result })
}

fn davenport(region: RegionArg, t: u64) -> Result<Outcome, Error> {
    let region = match region {
        RegionArg::Cube => SemialgebraicRegion::cube(),
        RegionArg::Disk => SemialgebraicRegion::disk(),
        RegionArg::Simplex => SemialgebraicRegion::simplex(),
    };
    let s = davenport_demo(&region, t)?;
    let mut report = Report::new("lattice points versus volume");
    report.check(
        format!("{} at t = {t}: |count - volume| / projection bound", region.name),
        s.ratio <= region.ratio_bound,
        format!("<= {}", region.ratio_bound),
        format!("{:.6} (count {}, volume {:.3})", s.ratio, s.count, s.volume),
        "lattice point counting",
    );
    let result = serde_json::to_value(&s).expect("sample serializes");
    Ok(Outcome { reports: vec![report], result })
}

fn classify(a: &BigInt, b: &BigInt, primes: &[u64]) -> Result<Outcome, Error> {
    let e = minimalize(a, b)?;
    let disc = e.discriminant();
    if num_traits::Zero::is_zero(&disc) {
        return Err(Error::Precondition("singular curve: 4A³ + 27B² = 0".into()));
    }
    let primes: Vec<u64> = if primes.is_empty() {
        selmer_core::roots::euler::primes_up_to(1000)
            .into_iter()
            .filter(|&p| p > 3 && num_traits::Zero::is_zero(&(&disc % BigInt::from(p))))
            .collect()
    } else {
        primes.to_vec()
    };
    let mut report = Report::new("curve classification");
    report.info("minimal model", format!("A = {}, B = {}", e.a, e.b), "reduction types");
    report.info("discriminant", disc.to_string(), "reduction types");
    let mut rows = serde_json::Map::new();
    for p in [2u64, 3] {
        let row = classify_row(&e, &shipped_table(p)?);
        report.info(format!("table row at p = {p}"), row.map_or("none".into(), |r| r.to_string()), "density tables");
        rows.insert(p.to_string(), json!(row));
    }
    let mut local = Vec::new();
    for &p in &primes {
        let r = reduction_type(&e, p)?;
        let (d, alpha) = (d_p(&e, p)?, alpha_p(&e, p)?);
        report.info(format!("p = {p}"), format!("{:?}, v(D) = {}, d_p = {d}, alpha_p = {alpha}", r.kind, r.v_delta), "local twist signs");
        local.push(json!({ "p": p, "reduction": format!("{:?}", r.kind), "v_delta": r.v_delta, "d_p": d, "alpha_p": alpha }));
    }
    let result = json!({
        "a": e.a.to_string(),
        "b": e.b.to_string(),
        "discriminant": disc.to_string(),
        "table_rows": rows,
        "local": local,
    });
    Ok(Outcome { reports: vec![report], result })
}

fn screen(zeros: &[Variable], coords: &[Rational]) -> Result<Outcome, Error> {
    let v = if coords.is_empty() {
        let one = Rational::from_integer(1.into());
        let mut v = Quintuple::from_coords(vec![one; 50])?;
        for &u in zeros {
            v.set(u, Rational::from_integer(0.into()));
        }
        v
    } else {
        Quintuple::from_coords(coords.to_vec())?
    };
    let mut report = Report::new("reducibility screen");
    let hit = reducibility_screen(&v);
    report.info("vanishing pattern", hit.map_or("none".into(), |k| k.to_string()), "reducibility patterns");
    let factor = q1_factorization(&v).ok();
    if let Some(w) = &factor {
        report.info("Q1 factorization", format!("{:?}: Q1 = -({}) ({})", w.pattern, w.left, w.right), "first sub-Pfaffian");
    }
    let result = json!({
        "pattern": hit,
        "q1_factorization": factor.map(|w| json!({
            "pattern": format!("{:?}", w.pattern),
            "left": w.left.to_string(),
            "right": w.right.to_string(),
        })),
    });
    Ok(Outcome { reports: vec![report], result })
}

type Suite = Box<dyn Fn() -> Result<Report, Error> + Send + Sync>;

fn all(data: &Data) -> Result<Outcome, Error> {
    let certs = data.certificates(None)?;
    let (t2, t3) = (data.table(2)?, data.table(3)?);
    let (a2, a3) = (t2.clone(), t3.clone());
    let suites: Vec<Suite> = vec![
        Box::new(move || Ok(suites::cusp_suite(&certs))),
        Box::new(|| Ok(suites::partition_suite())),
        Box::new(|| Ok(suites::order_weight_suite())),
        Box::new(|| suites::algebra_suite(suites::DEFAULT_SEED, 1000, 200)),
        Box::new(move || suites::densities_suite(&t2, &t3)),
        Box::new(|| suites::euler_suite(DEFAULT_PRIME_BOUND)),
        Box::new(move || Ok(suites::families_suite(&a2, &a3))),
        Box::new(suites::ranks_suite),
        Box::new(|| suites::gadgets_suite(100)),
        Box::new(suites::counts_suite),
        Box::new(suites::davenport_suite),
    ];
    let reports = suites.par_iter().map(|s| s()).collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::reports(reports))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let data = Data { dir: cli.data.clone() };
    match &cli.command {
        Command::Cusp { command: CuspCommand::Verify { certificates } } => {
            Ok(Outcome::reports(vec![suites::cusp_suite(&data.certificates(certificates.as_deref())?)]))
        }
        Command::Cusp { command: CuspCommand::Partition } => {
            Ok(Outcome::reports(vec![suites::partition_suite(), suites::order_weight_suite()]))
        }
        Command::Roots { command: RootsCommand::Densities { prime_bound } } => {
            let (t2, t3) = (data.table(2)?, data.table(3)?);
            let f = density_families(&t2, &t3, *prime_bound)?;
            let result = json!({
                "prime_bound": prime_bound,
                "f3_enclosure": [rat(&f.euler.f3_lower), rat(&f.euler.f3_upper)],
                "f4_enclosure": [rat(&f.euler.f4_lower), rat(&f.euler.f4_upper)],
                "stated": families_json(&f.stated),
                "printed_tables": families_json(&f.printed_tables),
                "row_tables": families_json(&f.row_tables),
            });
            let reports = vec![suites::euler_suite(*prime_bound)?, suites::families_suite(&t2, &t3)];
            Ok(Outcome { reports, result })
        }
        Command::Roots { command: RootsCommand::Classify { a, b, primes } } => classify(a, b, primes),
        Command::Roots { command: RootsCommand::VerifyTables } => {
            Ok(Outcome::reports(vec![suites::densities_suite(&data.table(2)?, &data.table(3)?)?]))
        }
        Command::Ranks { command: RanksCommand::Bounds { avg_selmer, parity, objective, family_density, rmax } } => {
            ranks_bounds(avg_selmer, *parity, *objective, family_density, *rmax)
        }
        Command::Count { command: CountCommand::Ij { x, sign } } => count_ij(x, *sign),
        Command::Count { command: CountCommand::Davenport { region, t } } => davenport(*region, *t),
        Command::Algebra { command: AlgebraCommand::Pfaffian { seed, trials } } => {
            Ok(Outcome::reports(vec![suites::algebra_suite(*seed, *trials, (*trials / 5).max(1))?]))
        }
        Command::Algebra { command: AlgebraCommand::Screen { zeros, coords } } => screen(zeros, coords),
        Command::All => all(&data),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let passed = outcome.reports.iter().all(Report::passed);
    if cli.json {
        let doc = json!({ "passed": passed, "reports": outcome.reports, "result": outcome.result });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
    } else if matches!(cli.command, Command::Ranks { .. }) {
        println!("{}", serde_json::to_string_pretty(&outcome.result).expect("result serializes"));
    } else {
        for r in &outcome.reports {
            print!("{}", r.to_text());
        }
        println!("{}", if passed { "overall: PASS" } else { "overall: FAIL" });
    }
    ExitCode::from(if passed { 0 } else { 1 })
}
