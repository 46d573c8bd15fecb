//! Command-line front end: exact computations with flagged partitions,
//! slide and forest polynomials, back-stable elements, and the signed
//! monomial-to-slide expansion.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing property,
//! 2 on malformed input, 3 on violated preconditions.

use flagpart::backstable::{
    backslide, expand_in_backslide_basis, multiply_backslides, parse_element, BackSlideExpansion,
};
use flagpart::forest::{parse_forest, IndexedForest};
use flagpart::kostka::{join, meet, mobius, monomial_to_backslides, monomial_to_slides, NonincreasingWord};
use flagpart::letter::parse_word;
use flagpart::nvector::NVector;
use flagpart::poly::Polynomial;
use flagpart::poset::parse_poset;
use flagpart::slide::{expand_in_slide_basis, slide_series};
use flagpart::verify::{run_all, Bounds};
use flagpart::Error;

const USAGE: &str = "\
usage: flagpart [--format text|machine] [--vars LO..HI] <command>

commands:
  kpoly <poset-file>            generating polynomial of a flagged poset
                                and its slide expansion
  slide word <letters>          chain series of an injective word,
                                letters like l(3,1) l(3,2) l(1,1)
  slide expand <poly>           slide-basis expansion of a polynomial
  forest poly <forest-file>     forest polynomial
  forest slides <forest-file>   slide expansion of a forest polynomial
  forest ofc <nvector>          the forest indexed by an exponent vector
  back slide <nvector>          back-stable slide in tensor form
  back mul <nvector> <nvector>  shuffle product of two back-stable slides
  back expand <element-file>    back-slide expansion of a tensor element
  kostka expand [--positive] <letters...>
                                signed (back-)slide expansion of a monomial
  kostka mobius <D> <C>         Mobius function of the word lattice
  kostka join <C> <D>           least upper bound
  kostka meet <C> <D>           greatest lower bound
  verify                        run the invariant suites

Exponent vectors are comma-separated counts starting at index 1, with an
optional `|` separating indices <= 0, e.g. 0,2,0,1 or 2,2| or 1|1. Words
for kostka are space- or comma-separated integers. The --vars window
evaluates back-stable output as a plain polynomial.
";

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Text,
    Machine,
}

struct Options {
    format: Format,
    vars: Option<(i32, i32)>,
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            2
        }
        Err(CliError::Failed(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
        Err(CliError::VerifyFailed(report)) => {
            print!("{report}");
            1
        }
    }
}

enum CliError {
    Usage(String),
    Failed(i32, String),
    VerifyFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = if e.is_parse() { 2 } else { 3 };
        CliError::Failed(code, e.to_string())
    }
}

type CliResult = Result<String, CliError>;

fn dispatch(args: &[String]) -> CliResult {
    let mut opts = Options { format: Format::Text, vars: None };
    let mut rest: Vec<&str> = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--format" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage("--format needs a value".into()))?;
                opts.format = match value.as_str() {
                    "text" => Format::Text,
                    "machine" => Format::Machine,
                    other => {
                        return Err(CliError::Usage(format!("unknown format {other:?}")))
                    }
                };
            }
            "--vars" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage("--vars needs LO..HI".into()))?;
                let (lo, hi) = value
                    .split_once("..")
                    .ok_or_else(|| CliError::Usage(format!("bad window {value:?}")))?;
                let lo: i32 = lo
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad window {value:?}")))?;
                let hi: i32 = hi
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad window {value:?}")))?;
                if lo > hi {
                    return Err(CliError::Usage(format!("empty window {value:?}")));
                }
                opts.vars = Some((lo, hi));
            }
            "--help" | "-h" => return Ok(USAGE.to_string()),
            other => rest.push(other),
        }
    }
    let Some((&verb, tail)) = rest.split_first() else {
        return Err(CliError::Usage("missing command".into()));
    };
    match verb {
        "kpoly" => cmd_kpoly(tail, &opts),
        "slide" => cmd_slide(tail, &opts),
        "forest" => cmd_forest(tail, &opts),
        "back" => cmd_back(tail, &opts),
        "kostka" => cmd_kostka(tail, &opts),
        "verify" => cmd_verify(tail),
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Failed(2, format!("cannot read {path}: {e}")))
}

fn render_poly(p: &Polynomial, opts: &Options) -> String {
    match opts.format {
        Format::Text => format!("{p}\n"),
        Format::Machine => p.to_machine(),
    }
}

fn render_backslides(e: &BackSlideExpansion, opts: &Options) -> String {
    if let Some((lo, hi)) = opts.vars {
        let mut sum = Polynomial::zero();
        for (c, k) in e.terms() {
            sum = &sum + &backslide(c).window_eval(lo, hi).scale(k);
        }
        return render_poly(&sum, opts);
    }
    match opts.format {
        Format::Text => format!("{e}\n"),
        Format::Machine => e.to_machine(),
    }
}

fn cmd_kpoly(args: &[&str], opts: &Options) -> CliResult {
    let [path] = args else {
        return Err(CliError::Usage("kpoly takes one poset file".into()));
    };
    let poset = parse_poset(&read_file(path)?)?;
    let k = poset.k_polynomial()?;
    let slides = expand_in_slide_basis(&k)?;
    Ok(match opts.format {
        Format::Text => format!("K = {k}\nslides = {slides}\n"),
        Format::Machine => format!("{}{}", k.to_machine(), slides.to_machine()),
    })
}

fn cmd_slide(args: &[&str], opts: &Options) -> CliResult {
    match args {
        ["word", rest @ ..] if !rest.is_empty() => {
            let word = parse_word(&rest.join(" "))?;
            Ok(render_poly(&slide_series(&word), opts))
        }
        ["expand", rest @ ..] if !rest.is_empty() => {
            let p: Polynomial = rest.join(" ").parse()?;
            let e = expand_in_slide_basis(&p)?;
            Ok(match opts.format {
                Format::Text => format!("{e}\n"),
                Format::Machine => e.to_machine(),
            })
        }
        _ => Err(CliError::Usage("slide takes `word <letters>` or `expand <poly>`".into())),
    }
}

fn cmd_forest(args: &[&str], opts: &Options) -> CliResult {
    match args {
        ["poly", path] => {
            let f = parse_forest(&read_file(path)?)?;
            Ok(render_poly(&f.polynomial()?, opts))
        }
        ["slides", path] => {
            let f = parse_forest(&read_file(path)?)?;
            let e = f.slide_expansion()?;
            Ok(match opts.format {
                Format::Text => format!("{e}\n"),
                Format::Machine => e.to_machine(),
            })
        }
        ["ofc", spec] => {
            let c: NVector = spec.parse()?;
            if let Some(m) = c.min_index() {
                if m < 1 {
                    return Err(Error::NonPositiveSupport(m).into());
                }
            }
            Ok(IndexedForest::from_c(&c).to_string())
        }
        _ => Err(CliError::Usage(
            "forest takes `poly <file>`, `slides <file>`, or `ofc <nvector>`".into(),
        )),
    }
}

fn cmd_back(args: &[&str], opts: &Options) -> CliResult {
    match args {
        ["slide", spec] => {
            let c: NVector = spec.parse()?;
            let f = backslide(&c);
            if let Some((lo, hi)) = opts.vars {
                return Ok(render_poly(&f.window_eval(lo, hi), opts));
            }
            Ok(match opts.format {
                Format::Text => format!("{f}\n"),
                Format::Machine => f.to_machine(),
            })
        }
        ["mul", a, b] => {
            let c: NVector = a.parse()?;
            let d: NVector = b.parse()?;
            Ok(render_backslides(&multiply_backslides(&c, &d), opts))
        }
        ["expand", path] => {
            let element = parse_element(&read_file(path)?)?;
            let e = expand_in_backslide_basis(&element);
            Ok(render_backslides(&e, opts))
        }
        _ => Err(CliError::Usage(
            "back takes `slide <nvector>`, `mul <nvector> <nvector>`, or `expand <file>`".into(),
        )),
    }
}

fn cmd_kostka(args: &[&str], opts: &Options) -> CliResult {
    match args {
        ["expand", rest @ ..] if !rest.is_empty() => {
            let (positive, letters) = match rest {
                ["--positive", tail @ ..] => (true, tail),
                tail => (false, tail),
            };
            if letters.is_empty() {
                return Err(CliError::Usage("kostka expand needs a word".into()));
            }
            let word: NonincreasingWord = letters.join(" ").parse()?;
            if positive {
                let e = monomial_to_slides(&word)?;
                Ok(match opts.format {
                    Format::Text => format!("{e}\n"),
                    Format::Machine => e.to_machine(),
                })
            } else {
                Ok(render_backslides(&monomial_to_backslides(&word), opts))
            }
        }
        ["mobius", lower, upper] => {
            let d: NonincreasingWord = lower.parse()?;
            let c: NonincreasingWord = upper.parse()?;
            Ok(format!("{}\n", mobius(&d, &c)?))
        }
        ["join", a, b] => {
            let c: NonincreasingWord = a.parse()?;
            let d: NonincreasingWord = b.parse()?;
            Ok(format!("{}\n", join(&c, &d)?))
        }
        ["meet", a, b] => {
            let c: NonincreasingWord = a.parse()?;
            let d: NonincreasingWord = b.parse()?;
            Ok(format!("{}\n", meet(&c, &d)?))
        }
        _ => Err(CliError::Usage(
            "kostka takes `expand [--positive] <word>`, `mobius <D> <C>`, `join <C> <D>`, or `meet <C> <D>`"
                .into(),
        )),
    }
}

fn cmd_verify(args: &[&str]) -> CliResult {
    if !args.is_empty() {
        return Err(CliError::Usage("verify takes no arguments".into()));
    }
    let mut bounds = Bounds::default();
    if let Ok(v) = std::env::var("FLAGPART_VERIFY_POSETS") {
        bounds.poset_corpus = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad FLAGPART_VERIFY_POSETS {v:?}")))?;
    }
    if let Ok(v) = std::env::var("FLAGPART_VERIFY_WORD_LEN") {
        bounds.slide_word_len = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad FLAGPART_VERIFY_WORD_LEN {v:?}")))?;
    }
    let checks = run_all(&bounds);
    let mut report = String::new();
    let mut all_ok = true;
    for check in &checks {
        if check.passed() {
            report.push_str(&format!("ok   {}\n", check.name));
        } else {
            all_ok = false;
            report.push_str(&format!("FAIL {}: {}\n", check.name, check.detail));
        }
    }
    report.push_str(&format!(
        "{} checks, {} failed\n",
        checks.len(),
        checks.iter().filter(|c| !c.passed()).count()
    ));
    if all_ok {
        Ok(report)
    } else {
        Err(CliError::VerifyFailed(report))
    }
}
