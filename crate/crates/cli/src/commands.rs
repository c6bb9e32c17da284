use clap::{Args, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use weilbounds::conductor::{self, DepthMethod, LocalFieldParams};
use weilbounds::genus::{self, AngleSet, ArithmeticMode};
use weilbounds::plancherel::{self, DensitySpec, PiecewiseLinear};
use weilbounds::vaaler::{self, TorusInterval};
use weilbounds::weil::{self, WeilParams};
use weilbounds::Error;

use crate::error::CliError;
use crate::output::{Payload, Table};

#[derive(Clone, Debug, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Enumerate monic integer polynomials whose roots all have |α| = q^{w/2}
    WeilEnum(WeilEnumArgs),
    /// Depth, conductor and cyclotomic bounds
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Extremal trigonometric majorant and minorant of an interval
    Vaaler(VaalerArgs),
    /// Seeded decay table for the fraction of a family near admissible traces
    Simulate(SimulateArgs),
    /// Genus bounds for curves over finite fields
    #[command(subcommand)]
    Genus(GenusCommand),
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct WeilEnumArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long, default_value_t = 1)]
    pub weight: u32,
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub irreducible: bool,
}

#[derive(Clone, Debug, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundsCommand {
    /// Depth and conductor bound for a rank-n parameter with n·A-bounded field of rationality
    Depth(DepthArgs),
    /// Cyclotomic ratio of N against n^n
    Cyclotomic(CyclotomicArgs),
    /// lcm of all m with φ(m) ≤ B
    LcmPhi(LcmPhiArgs),
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct DepthArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long = "A")]
    pub a: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long = "eK", default_value_t = 1)]
    pub e_k: u64,
    #[arg(long = "fK", default_value_t = 1)]
    pub f_k: u64,
    #[arg(long, default_value = "v1", value_parser = ["v1", "v2"])]
    pub method: String,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct CyclotomicArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long = "N")]
    pub modulus: u64,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct LcmPhiArgs {
    #[arg(long = "B")]
    pub b: u64,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct VaalerArgs {
    /// endpoints a,b in [0, 1]; b < a wraps around
    #[arg(long)]
    pub interval: String,
    #[arg(long)]
    pub kappa: u32,
    /// also write (x, minorant, indicator, majorant) samples to this path
    #[arg(long)]
    pub emit_csv: Option<String>,
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct SimulateArgs {
    /// `lebesgue`, or a piecewise-linear density given as `x:y,x:y,...`
    #[arg(long, default_value = "lebesgue")]
    pub density: String,
    /// increasing family sizes, comma separated
    #[arg(long)]
    pub sizes: String,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub k: u32,
    #[arg(long = "A")]
    pub a: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Debug, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusCommand {
    /// Linear-programming genus bound from prescribed Frobenius angles
    Lp(LpArgs),
    /// Explicit-formula genus bound for curves with no points over F_{q^n}, n ≤ s
    Ehr(EhrArgs),
    /// Data of the Fermat curve of degree p^r + 1
    Fermat(FermatArgs),
    /// Smallest exponent forcing a point, for genus g
    MadanMadden(MadanMaddenArgs),
    /// Genus bound from the product of P(1) over Weil factors of degree ≤ 2d
    Dejong(DejongArgs),
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct LpArgs {
    #[arg(long)]
    pub q: u64,
    /// comma-separated angles such as `0.5pi,1pi` or radians
    #[arg(long)]
    pub angles: String,
    #[arg(long)]
    pub nmax: Option<u32>,
    /// force binary64 arithmetic
    #[arg(long)]
    pub float: bool,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct EhrArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub s: u32,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct FermatArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: u32,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct MadanMaddenArgs {
    #[arg(long)]
    pub g: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct DejongArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub d: u32,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::WeilEnum(_) => "weil-enum",
            Command::Bounds(BoundsCommand::Depth(_)) => "bounds depth",
            Command::Bounds(BoundsCommand::Cyclotomic(_)) => "bounds cyclotomic",
            Command::Bounds(BoundsCommand::LcmPhi(_)) => "bounds lcm-phi",
            Command::Vaaler(_) => "vaaler",
            Command::Simulate(_) => "simulate",
            Command::Genus(GenusCommand::Lp(_)) => "genus lp",
            Command::Genus(GenusCommand::Ehr(_)) => "genus ehr",
            Command::Genus(GenusCommand::Fermat(_)) => "genus fermat",
            Command::Genus(GenusCommand::MadanMadden(_)) => "genus madan-madden",
            Command::Genus(GenusCommand::Dejong(_)) => "genus dejong",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Command::Simulate(a) => Some(a.seed),
            _ => None,
        }
    }

    fn schema(&self) -> String {
        format!("weilbounds.{}/1", self.name().replace(' ', "."))
    }

    pub fn run(&self) -> Result<Payload, CliError> {
        let (body, table) = match self {
            Command::WeilEnum(a) => weil_enum(a)?,
            Command::Bounds(b) => bounds(b)?,
            Command::Vaaler(a) => run_vaaler(a)?,
            Command::Simulate(a) => simulate(a)?,
            Command::Genus(g) => run_genus(g)?,
        };
        Ok(Payload::new(self.schema(), body, table))
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    Ok(serde_json::to_value(v)?)
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("cannot parse {what} from {t:?}")))
        })
        .collect()
}

fn weil_enum(a: &WeilEnumArgs) -> Result<(Value, Option<Table>), CliError> {
    let q: BigInt =
        a.q.parse()
            .map_err(|_| CliError::Usage(format!("q must be an integer, got {:?}", a.q)))?;
    let params = WeilParams::new(q, a.weight)?;
    let report = weil::enumeration_report(&params, a.degree, a.irreducible)?;
    let table = Table {
        header: vec!["index".into(), "polynomial".into(), "coefficients".into()],
        rows: report
            .polynomials
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                vec![i.to_string(), p.to_string(), coeffs.join(" ")]
            })
            .collect(),
    };
    let mut body = to_value(&report)?;
    body["count"] = json!(report.polynomials.len());
    Ok((body, Some(table)))
}

fn bounds(cmd: &BoundsCommand) -> Result<(Value, Option<Table>), CliError> {
    let body = match cmd {
        BoundsCommand::Depth(a) => {
            let method = match a.method.as_str() {
                "v2" => DepthMethod::V2,
                _ => DepthMethod::V1,
            };
            let field = LocalFieldParams::new(a.p, a.e_k, a.f_k)?;
            to_value(&conductor::depth_bound(method, a.n, a.a, &field)?)?
        }
        BoundsCommand::Cyclotomic(a) => {
            let report = conductor::cyclotomic_ratio(a.n, a.modulus)?;
            let mut v = to_value(&report)?;
            v["verdict"] = json!(if report.within_bound {
                "<= n^n"
            } else {
                "> n^n"
            });
            v
        }
        BoundsCommand::LcmPhi(a) => {
            json!({ "B": a.b, "lcm": conductor::lcm_phi_le(a.b)?.to_string() })
        }
    };
    Ok((body, None))
}

fn parse_interval(s: &str) -> Result<TorusInterval, CliError> {
    let ends: Vec<f64> = parse_list(s, "interval endpoint")?;
    match ends[..] {
        [a, b] => Ok(TorusInterval::new(a, b)?),
        _ => Err(CliError::Usage(format!(
            "interval needs two endpoints a,b, got {s:?}"
        ))),
    }
}

fn run_vaaler(a: &VaalerArgs) -> Result<(Value, Option<Table>), CliError> {
    let interval = parse_interval(&a.interval)?;
    let pair = vaaler::vaaler_pair(interval, a.kappa)?;
    if let Some(path) = &a.emit_csv {
        if a.samples == 0 {
            return Err(Error::InvalidParameter("samples must be positive".into()).into());
        }
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["x", "minorant", "indicator", "majorant"])?;
        for j in 0..a.samples {
            let x = j as f64 / a.samples as f64;
            let ind = if interval.contains(x) { 1.0 } else { 0.0 };
            w.write_record(
                [x, pair.minorant_at(x), ind, pair.majorant_at(x)].map(|v| v.to_string()),
            )?;
        }
        w.flush()?;
    }
    let (minus, plus) = (pair.minorant(), pair.majorant());
    let k = a.kappa as i32;
    let table = Table {
        header: [
            "nu",
            "minorant_re",
            "minorant_im",
            "majorant_re",
            "majorant_im",
        ]
        .map(String::from)
        .to_vec(),
        rows: (-k..=k)
            .map(|nu| {
                let (m, p) = (minus.coeff(&[nu]), plus.coeff(&[nu]));
                vec![
                    nu.to_string(),
                    m.re.to_string(),
                    m.im.to_string(),
                    p.re.to_string(),
                    p.im.to_string(),
                ]
            })
            .collect(),
    };
    let body = json!({
        "interval": { "start": interval.start(), "end": interval.end(), "length": interval.length() },
        "kappa": a.kappa,
        "minorant": to_value(&minus)?,
        "majorant": to_value(&plus)?,
        "minorant_mean": pair.minorant_mean(),
        "majorant_mean": pair.majorant_mean(),
        "mean_gap": pair.mean_gap(),
    });
    Ok((body, Some(table)))
}

fn parse_density(s: &str) -> Result<DensitySpec, CliError> {
    if s == "lebesgue" {
        return Ok(DensitySpec::lebesgue(1)?);
    }
    Ok(DensitySpec::product(
        vec![PiecewiseLinear::parse(s)?],
        false,
    )?)
}

fn simulate(a: &SimulateArgs) -> Result<(Value, Option<Table>), CliError> {
    let density = parse_density(&a.density)?;
    let sizes: Vec<usize> = parse_list(&a.sizes, "size")?;
    let t = plancherel::serre_decay_experiment(a.q, a.k, a.a, &sizes, a.seed, &density)?;
    let table = Table {
        header: [
            "size",
            "kappa",
            "exact",
            "lower",
            "upper",
            "ceiling",
            "empty_admissible",
        ]
        .map(String::from)
        .to_vec(),
        rows: t
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.size.to_string(),
                    r.kappa.to_string(),
                    r.exact.to_string(),
                    r.lower.to_string(),
                    r.upper.to_string(),
                    r.ceiling.to_string(),
                    t.empty_admissible.to_string(),
                ]
            })
            .collect(),
    };
    Ok((to_value(&t)?, Some(table)))
}

fn run_genus(cmd: &GenusCommand) -> Result<(Value, Option<Table>), CliError> {
    let body = match cmd {
        GenusCommand::Lp(a) => {
            let set = AngleSet::parse(&a.angles)?;
            let mode = if a.float {
                ArithmeticMode::Float
            } else {
                ArithmeticMode::Auto
            };
            to_value(&genus::max_genus_lp(a.q, &set, a.nmax, mode)?)?
        }
        GenusCommand::Ehr(a) => {
            json!({ "q": a.q, "s": a.s, "genus_bound": genus::ehr_bound(a.q, a.s)? })
        }
        GenusCommand::Fermat(a) => to_value(&genus::fermat_data(a.p, a.r)?)?,
        GenusCommand::MadanMadden(a) => json!({
            "g": a.g,
            "c": a.c,
            "min_exponent": genus::madan_madden_min_exponent(a.g, a.c)?,
            "caveat": "implicit constant c is a parameter; only the growth shape is established",
        }),
        GenusCommand::Dejong(a) => to_value(&genus::dejong_genus_bound(a.q, a.d, a.c)?)?,
    };
    Ok((body, None))
}
