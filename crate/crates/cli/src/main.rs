//! ratcat: maps, statistics, verification suites and polynomial tabulation
//! for the rational Catalan dictionary (cores, abaci, affine permutations,
//! rational Dyck paths, and root systems).
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when a theorem suite
//! reports a counterexample.

use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use ratcat_core::abacus::{alpha, alpha_inv, beta_inv};
use ratcat_core::affine::AffinePermutation;
use ratcat_core::dyck::{enumerate_paths, RationalDyckPath};
use ratcat_core::partition::Partition;
use ratcat_core::roots::{enumerate_dominant_p_stable, RootSystem, SystemType};
use ratcat_core::verify::{
    self, c_phi_p, configure_jobs, dominant_p_stable_windows, qt_catalan, SuiteKind, SuiteParams,
    SUITE_NAMES,
};
use ratcat_core::{Abacus, Error};

#[derive(Parser)]
#[command(
    name = "ratcat",
    about = "exact rational Catalan combinatorics: cores, abaci, affine permutations, Dyck paths",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ObjectKind {
    Perm,
    Core,
    Abacus,
    Dyck,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CountKind {
    Dyck,
    Core,
    Perm,
    Stable,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between the four carriers of the dictionary.
    Map {
        #[arg(long, value_enum)]
        from: ObjectKind,
        #[arg(long, value_enum)]
        to: ObjectKind,
        #[arg(long)]
        input: String,
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print a statistic of a single object.
    #[command(group(ArgGroup::new("stat").required(true).args([
        "shi", "inv", "codinv", "skl", "area", "length", "hset", "labels",
        "pak_stanley", "dual_pak_stanley", "complement", "runners",
    ])))]
    Stat {
        /// Rational Shi tableau of a dominant p-stable window (needs -p).
        #[arg(long)]
        shi: bool,
        /// Inversion table of a window.
        #[arg(long)]
        inv: bool,
        /// Codinv tableau of a path word.
        #[arg(long)]
        codinv: bool,
        /// Skew length of a core (needs -n and -p).
        #[arg(long)]
        skl: bool,
        /// Area of a path word.
        #[arg(long)]
        area: bool,
        /// Coxeter length of a window.
        #[arg(long)]
        length: bool,
        /// Positive label set of a path word.
        #[arg(long)]
        hset: bool,
        /// Sorted north-step labels of a path word.
        #[arg(long)]
        labels: bool,
        /// Pak-Stanley labelling of a dominant p-stable window (needs -p).
        #[arg(long = "pak-stanley")]
        pak_stanley: bool,
        /// Dual Pak-Stanley labelling (needs -p).
        #[arg(long = "dual-pak-stanley")]
        dual_pak_stanley: bool,
        /// Complement vector of a path word.
        #[arg(long)]
        complement: bool,
        /// Runner diagram of an abacus (needs -n).
        #[arg(long)]
        runners: bool,
        /// Force the input object kind instead of auto-detecting.
        #[arg(long, value_enum)]
        from: Option<ObjectKind>,
        #[arg(long)]
        input: String,
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
        /// With --shi: also print the tableau under the alternative
        /// permutation reading, for comparison.
        #[arg(long)]
        debug: bool,
    },
    /// Run verification suites (theorem suites exit 2 on a counterexample).
    Verify {
        /// Suite name, or `all`.
        suite: String,
        #[arg(long = "n-max")]
        n_max: Option<u64>,
        #[arg(long = "p-max")]
        p_max: Option<u64>,
        #[arg(long = "size-max")]
        size_max: Option<u64>,
        /// Skip the large (7,16) instance in the pipeline suites.
        #[arg(long = "no-large")]
        no_large: bool,
        /// Root systems for the general-type suite, e.g. "A2,B3,G2".
        #[arg(long)]
        systems: Option<String>,
        /// Run p < FACTOR*h (coprime to h) in the general-type suite.
        #[arg(long = "p-factor")]
        p_factor: Option<u64>,
        /// Random hunting seeds "LO..HI" for the conjecture suites.
        #[arg(long = "seed-range")]
        seed_range: Option<String>,
        /// Worker threads (default: RATCAT_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the rational q,t-Catalan polynomial, or the one-variable
    /// distribution over a root system with --type.
    Catalan {
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        p: u64,
        /// Root system such as A2, B3, G2.
        #[arg(long = "type")]
        system: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Count objects for a coprime pair (or a root system with --type).
    Count {
        what: CountKind,
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        p: u64,
        #[arg(long = "type")]
        system: Option<String>,
    },
    /// Stream objects one per line.
    Enumerate {
        what: CountKind,
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        p: u64,
        #[arg(long = "type")]
        system: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

enum Object {
    Perm(AffinePermutation),
    Core(Partition),
    Abacus(Abacus),
    Dyck(RationalDyckPath),
}

fn detect_kind(input: &str) -> ObjectKind {
    let t = input.trim();
    if t.starts_with('[') {
        ObjectKind::Perm
    } else if t.starts_with("beads:") {
        ObjectKind::Abacus
    } else if !t.is_empty() && t.chars().all(|c| c == 'N' || c == 'E') {
        ObjectKind::Dyck
    } else {
        ObjectKind::Core
    }
}

fn parse_object(kind: ObjectKind, input: &str) -> Result<Object, Error> {
    match kind {
        ObjectKind::Perm => Ok(Object::Perm(AffinePermutation::from_str(input)?)),
        ObjectKind::Core => Ok(Object::Core(Partition::from_str(input)?)),
        ObjectKind::Abacus => Ok(Object::Abacus(Abacus::from_str(input)?)),
        ObjectKind::Dyck => Ok(Object::Dyck(RationalDyckPath::from_str(input)?)),
    }
}

fn need(p: Option<u64>, flag: &str) -> Result<u64, Error> {
    match p {
        Some(0) => Err(Error::InvalidParams(format!("{flag} must be positive"))),
        Some(v) => Ok(v),
        None => Err(Error::InvalidParams(format!("{flag} is required here"))),
    }
}

fn to_core(obj: Object) -> Result<Partition, Error> {
    match obj {
        Object::Core(k) => Ok(k),
        Object::Perm(w) => w.core(),
        Object::Dyck(x) => Ok(x.to_core()),
        Object::Abacus(a) => {
            if a.is_balanced() {
                alpha_inv(&a)
            } else if a.is_normalised() {
                beta_inv(&a)
            } else {
                Err(Error::NotBalanced)
            }
        }
    }
}

fn convert(obj: Object, to: ObjectKind, n: Option<u64>, p: Option<u64>) -> Result<Object, Error> {
    match to {
        ObjectKind::Core => Ok(Object::Core(to_core(obj)?)),
        ObjectKind::Abacus => Ok(Object::Abacus(match obj {
            Object::Abacus(a) => a,
            Object::Perm(w) => w.bead_set()?,
            other => alpha(&to_core(other)?),
        })),
        ObjectKind::Perm => Ok(Object::Perm(match obj {
            Object::Perm(w) => w,
            Object::Abacus(a) => AffinePermutation::from_bead_set(&a, need(n, "-n")?)?,
            Object::Dyck(x) => x.to_permutation()?,
            Object::Core(k) => AffinePermutation::from_bead_set(&alpha(&k), need(n, "-n")?)?,
        })),
        ObjectKind::Dyck => Ok(Object::Dyck(match obj {
            Object::Dyck(x) => x,
            Object::Perm(w) => RationalDyckPath::from_permutation(&w, need(p, "-p")?)?,
            other => {
                let k = to_core(other)?;
                RationalDyckPath::from_core(&k, need(n, "-n")?, need(p, "-p")?)?
            }
        })),
    }
}

fn render(obj: &Object, json: bool) -> String {
    match obj {
        Object::Perm(w) => {
            if json {
                format!(
                    "{{\"n\":{},\"window\":{}}}",
                    w.n(),
                    serde_vec(w.window().iter())
                )
            } else {
                w.to_string()
            }
        }
        Object::Core(k) => {
            if json {
                format!("{{\"parts\":{}}}", serde_vec(k.parts().iter()))
            } else {
                k.to_string()
            }
        }
        Object::Abacus(a) => {
            if json {
                format!(
                    "{{\"beads\":{},\"gaps\":{}}}",
                    serde_vec(a.pos_beads().iter()),
                    serde_vec(a.neg_gaps().iter())
                )
            } else {
                a.to_string()
            }
        }
        Object::Dyck(x) => {
            if json {
                x.to_json()
            } else {
                x.to_string()
            }
        }
    }
}

fn serde_vec<T: ToString>(items: impl Iterator<Item = T>) -> String {
    let inner: Vec<String> = items.map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn vector_text(v: &[u64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run() -> Result<u8, Error> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return Ok(code);
        }
    };

    match cli.command {
        Command::Map {
            from,
            to,
            input,
            n,
            p,
            json,
        } => {
            let obj = parse_object(from, &input)?;
            let out = convert(obj, to, n, p)?;
            println!("{}", render(&out, json));
            Ok(0)
        }
        Command::Stat {
            shi,
            inv,
            codinv,
            skl,
            area,
            length,
            hset,
            labels,
            pak_stanley,
            dual_pak_stanley,
            complement,
            runners,
            from,
            input,
            n,
            p,
            json,
            debug,
        } => {
            let kind = from.unwrap_or_else(|| detect_kind(&input));
            let obj = parse_object(kind, &input)?;
            match obj {
                Object::Perm(w) => {
                    if shi {
                        let t = w.shi_tableau(need(p, "-p")?)?;
                        println!("{}", if json { t.to_json() } else { t.to_string() });
                        if debug {
                            let (s, _, _) = w.inverse().decompose();
                            let (s_alt, _, _) = w.decompose();
                            println!("s (inverse decomposition) = {s:?}");
                            println!("alternative s (direct decomposition) = {s_alt:?}");
                            let alt = w.shi_tableau_with_perm(need(p, "-p")?, &s_alt);
                            println!("tableau under the alternative reading:\n{alt}");
                        }
                    } else if inv {
                        let t = w.inversion_table();
                        println!("{}", if json { t.to_json() } else { t.to_string() });
                    } else if length {
                        println!("{}", w.length());
                    } else if pak_stanley {
                        println!("{}", vector_text(&w.pak_stanley(need(p, "-p")?)?));
                    } else if dual_pak_stanley {
                        println!("{}", vector_text(&w.dual_pak_stanley(need(p, "-p")?)?));
                    } else {
                        return Err(Error::InvalidParams(
                            "that statistic is not defined for a window".into(),
                        ));
                    }
                }
                Object::Dyck(x) => {
                    if codinv {
                        let t = x.codinv_tableau();
                        println!("{}", if json { t.to_json() } else { t.to_string() });
                    } else if area {
                        println!("{}", x.area());
                    } else if hset {
                        let items: Vec<String> = x.h_set().iter().map(|h| h.to_string()).collect();
                        println!("{{{}}}", items.join(","));
                    } else if labels {
                        let items: Vec<String> =
                            x.north_labels().iter().map(|l| l.to_string()).collect();
                        println!("({})", items.join(","));
                    } else if complement {
                        println!("{}", vector_text(&x.complement()));
                    } else {
                        return Err(Error::InvalidParams(
                            "that statistic is not defined for a path".into(),
                        ));
                    }
                }
                Object::Core(k) => {
                    if skl {
                        println!("{}", k.skew_length(need(n, "-n")?, need(p, "-p")?)?);
                    } else {
                        return Err(Error::InvalidParams(
                            "that statistic is not defined for a core".into(),
                        ));
                    }
                }
                Object::Abacus(a) => {
                    if runners {
                        print!("{}", a.runner_diagram(need(n, "-n")?));
                    } else {
                        return Err(Error::InvalidParams(
                            "that statistic is not defined for an abacus".into(),
                        ));
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            n_max,
            p_max,
            size_max,
            no_large,
            systems,
            p_factor,
            seed_range,
            jobs,
            json,
        } => {
            let jobs = jobs.or_else(|| {
                std::env::var("RATCAT_JOBS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            });
            configure_jobs(jobs);
            let params = SuiteParams {
                n_max,
                p_max,
                size_max,
                include_large: if no_large { Some(false) } else { None },
                systems: systems.map(|s| parse_systems(&s)).transpose()?,
                stable_p_factor: p_factor,
                seed_range: seed_range.map(|s| parse_seed_range(&s)).transpose()?,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else if SUITE_NAMES.contains(&suite.as_str()) {
                vec![SUITE_NAMES.iter().find(|&&s| s == suite).copied().unwrap()]
            } else {
                return Err(Error::UnknownSuite(suite));
            };
            let mut theorem_failure = false;
            let mut reports = Vec::new();
            for name in names {
                let report = verify::run_suite(name, &params)?;
                if report.kind == SuiteKind::Theorem && !report.passed() {
                    theorem_failure = true;
                }
                if json {
                    reports.push(report.to_json());
                } else {
                    print!("{report}");
                }
            }
            if json {
                println!("[{}]", reports.join(","));
            }
            Ok(if theorem_failure { 2 } else { 0 })
        }
        Command::Catalan { n, p, system, json } => {
            let poly = match system {
                Some(name) => c_phi_p(&parse_system(&name)?, p)?,
                None => qt_catalan(need(n, "-n")?, p)?,
            };
            println!(
                "{}",
                if json {
                    poly.to_json()
                } else {
                    poly.to_string()
                }
            );
            Ok(0)
        }
        Command::Count { what, n, p, system } => {
            let count = match what {
                CountKind::Dyck | CountKind::Core => enumerate_paths(need(n, "-n")?, p)?.count(),
                CountKind::Perm => dominant_p_stable_windows(need(n, "-n")?, p)?.len(),
                CountKind::Stable => {
                    let rs = parse_system(&system.ok_or_else(|| {
                        Error::InvalidParams("--type is required for stable".into())
                    })?)?;
                    enumerate_dominant_p_stable(&rs, p)?.len()
                }
            };
            println!("{count}");
            Ok(0)
        }
        Command::Enumerate {
            what,
            n,
            p,
            system,
            json,
        } => {
            match what {
                CountKind::Dyck => {
                    for x in enumerate_paths(need(n, "-n")?, p)? {
                        println!("{}", if json { x.to_json() } else { x.to_string() });
                    }
                }
                CountKind::Core => {
                    for x in enumerate_paths(need(n, "-n")?, p)? {
                        let k = x.to_core();
                        println!("{}", render(&Object::Core(k), json));
                    }
                }
                CountKind::Perm => {
                    for (_, w) in dominant_p_stable_windows(need(n, "-n")?, p)? {
                        println!("{}", render(&Object::Perm(w), json));
                    }
                }
                CountKind::Stable => {
                    let rs = parse_system(&system.ok_or_else(|| {
                        Error::InvalidParams("--type is required for stable".into())
                    })?)?;
                    for el in enumerate_dominant_p_stable(&rs, p)? {
                        println!("{}", el.to_json());
                    }
                }
            }
            Ok(0)
        }
    }
}

fn parse_system(name: &str) -> Result<RootSystem, Error> {
    let name = name.trim();
    if name.len() < 2 {
        return Err(Error::UnsupportedSystem(name.to_string()));
    }
    let (label, rank) = name.split_at(1);
    let label: SystemType = label.parse()?;
    let rank: usize = rank
        .parse()
        .map_err(|_| Error::UnsupportedSystem(name.to_string()))?;
    RootSystem::build(label, rank)
}

fn parse_systems(list: &str) -> Result<Vec<(SystemType, usize)>, Error> {
    list.split(',')
        .map(|name| {
            let rs = parse_system(name)?;
            Ok((rs.label(), rs.rank()))
        })
        .collect()
}

fn parse_seed_range(s: &str) -> Result<(u64, u64), Error> {
    let parts: Vec<&str> = s.split("..").collect();
    if parts.len() != 2 {
        return Err(Error::InvalidParams(format!(
            "bad seed range `{s}`, expected LO..HI"
        )));
    }
    let lo = parts[0]
        .parse()
        .map_err(|_| Error::InvalidParams(format!("bad seed `{}`", parts[0])))?;
    let hi = parts[1]
        .parse()
        .map_err(|_| Error::InvalidParams(format!("bad seed `{}`", parts[1])))?;
    Ok((lo, hi))
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
