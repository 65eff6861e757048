//! Rendering of command results. Every output starts with a version line
//! (a comment in text, CSV and DOT; a `generator` field in JSON).

use num_bigint::BigInt;
use serde::Serialize;

use coxeter_growth::analysis::{
    classify_algebraic, pisot_limit_experiment, AlgebraicProfile, ExperimentReport,
};
use coxeter_growth::catalog::{enumerate_finite_subsets, CatalogEntry, FiniteType};
use coxeter_growth::gram::{self, GramMatrix};
use coxeter_growth::matrix::{ContractibleEdgeSpec, CoxeterMatrix};
use coxeter_growth::oracle::{ball, marked_distance_bound, oracle_coefficients, reduce_word, Word};
use coxeter_growth::steinberg::{growth_rate, growth_series, GrowthRateResult, GrowthSeries, Rate};
use coxeter_growth::subset::GeneratorSet;
use coxeter_growth::sweep::{
    combined_sweep, edge_family_members, family_rates, format_f64, parse_polygon_template,
    polygon_family, rate_convergence_sweep, sweep_csv, SweepGrid, SweepRow,
};

use crate::error::CliError;
use crate::{Format, VERSION_LINE};

fn pick(format: Option<Format>, allowed: &[Format]) -> Result<Format, CliError> {
    match format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(CliError::Usage(format!(
            "format {f:?} is not available for this command"
        ))),
    }
}

fn header(format: Format) -> String {
    match format {
        Format::Text | Format::Csv => format!("# {VERSION_LINE}\n"),
        Format::Dot => format!("// {VERSION_LINE}\n"),
        Format::Json => String::new(),
    }
}

#[derive(Serialize)]
struct Wrapped<'a, T: Serialize> {
    generator: &'a str,
    data: &'a T,
}

fn json<T: Serialize>(data: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Wrapped {
        generator: VERSION_LINE,
        data,
    })
    .expect("output serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ClassifyOut {
    growth_type: String,
    rank: usize,
    eigenvalues: Vec<String>,
}

pub fn classify(m: &CoxeterMatrix, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json])?;
    let t = gram::classify(m)?;
    let out = ClassifyOut {
        growth_type: format!("{t:?}"),
        rank: m.rank(),
        eigenvalues: GramMatrix::new(m)
            .eigenvalues()
            .into_iter()
            .map(format_f64)
            .collect(),
    };
    Ok(match format {
        Format::Json => json(&out),
        _ => format!(
            "{}type: {}\nrank: {}\ngram eigenvalues: {}\n",
            header(format),
            out.growth_type,
            out.rank,
            out.eigenvalues.join(", ")
        ),
    })
}

#[derive(Serialize)]
struct RateOut {
    growth_type: String,
    rate: String,
    rate_low: String,
    rate_high: String,
    /// Exact bracket on `1/ω` as `p/q`.
    root_bracket: Option<[String; 2]>,
    numerator: Option<String>,
}

impl From<&GrowthRateResult> for RateOut {
    fn from(r: &GrowthRateResult) -> Self {
        RateOut {
            growth_type: format!("{:?}", r.growth_type),
            rate: r.rate.decimal(),
            rate_low: r.rate.low_decimal(),
            rate_high: r.rate.high_decimal(),
            root_bracket: match &r.rate {
                Rate::ExactlyOne => None,
                Rate::Bracket { root, .. } => Some([root.low.to_string(), root.high.to_string()]),
            },
            numerator: r.numerator.as_ref().map(|p| p.to_string()),
        }
    }
}

#[derive(Serialize)]
struct GrowthOut {
    series: &'static str,
    growth_series: String,
    bracket: Option<String>,
    order: Option<String>,
    coefficients: Vec<String>,
    rate: Option<RateOut>,
}

fn coefficient_csv(a: &[BigInt]) -> String {
    let mut out = String::from("m,a,s\n");
    let mut s = BigInt::from(0);
    for (i, c) in a.iter().enumerate() {
        s += c;
        out.push_str(&format!("{i},{c},{s}\n"));
    }
    out
}

pub fn growth(
    m: &CoxeterMatrix,
    m_max: usize,
    rate: bool,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Csv, Format::Json])?;
    let series = growth_series(m)?;
    let coefficients = series
        .coefficients(m_max)
        .map_err(coxeter_growth::steinberg::SteinbergError::from)?;
    if format == Format::Csv {
        if rate {
            return Err(CliError::Usage(
                "--rate is not available with --format csv".into(),
            ));
        }
        return Ok(format!(
            "{}{}",
            header(format),
            coefficient_csv(&coefficients)
        ));
    }
    let (kind, bracket, order) = match &series {
        GrowthSeries::Finite(p) => {
            let family = enumerate_finite_subsets(m)?;
            let degrees = family
                .get(GeneratorSet::full(m.rank()))
                .map(|t| t.degrees())
                .unwrap_or_default();
            let parts: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
            let order = p.eval_integer(&BigInt::from(1)).to_string();
            (
                "polynomial",
                Some(format!("[{}]", parts.join(";"))),
                Some(order),
            )
        }
        GrowthSeries::Infinite(_) => ("rational", None, None),
    };
    let out = GrowthOut {
        series: kind,
        growth_series: series.to_string(),
        bracket,
        order,
        coefficients: coefficients.iter().map(|c| c.to_string()).collect(),
        rate: if rate {
            Some(RateOut::from(&growth_rate(m)?))
        } else {
            None
        },
    };
    if format == Format::Json {
        return Ok(json(&out));
    }
    let mut s = header(format);
    s.push_str(&format!(
        "series: {}\nf(z) = {}\n",
        out.series, out.growth_series
    ));
    if let (Some(b), Some(o)) = (&out.bracket, &out.order) {
        s.push_str(&format!("bracket: {b}\norder: {o}\n"));
    }
    s.push_str(&format!("coefficients: {}\n", out.coefficients.join(",")));
    if let Some(r) = &out.rate {
        s.push_str(&format!("type: {}\nrate: {}\n", r.growth_type, r.rate));
        if let Some([lo, hi]) = &r.root_bracket {
            s.push_str(&format!(
                "rate bracket: [{}, {}]\n",
                r.rate_low, r.rate_high
            ));
            s.push_str(&format!("reciprocal bracket: [{lo}, {hi}]\n"));
        }
        if let Some(n) = &r.numerator {
            s.push_str(&format!("numerator: {n}\n"));
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct SweepRowOut {
    l: Option<u32>,
    rate: RateOut,
    sup_dev: Option<String>,
}

fn sweep_out(rows: &[SweepRow], format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Csv, Format::Json])?;
    Ok(match format {
        Format::Json => {
            let out: Vec<SweepRowOut> = rows
                .iter()
                .map(|r| SweepRowOut {
                    l: r.param,
                    rate: RateOut::from(&r.rate),
                    sup_dev: r.sup_dev.map(format_f64),
                })
                .collect();
            json(&out)
        }
        _ => format!("{}{}", header(format), sweep_csv(rows)),
    })
}

pub fn sweep_rate(
    m: &CoxeterMatrix,
    l_list: &[u32],
    format: Option<Format>,
) -> Result<String, CliError> {
    sweep_out(&rate_convergence_sweep(m, l_list)?, format)
}

pub fn sweep_normal(
    m: &CoxeterMatrix,
    rho: f64,
    l_list: &[u32],
    format: Option<Format>,
) -> Result<String, CliError> {
    sweep_out(
        &combined_sweep(m, rho, SweepGrid::default(), l_list)?,
        format,
    )
}

pub fn sweep_polygon(
    template: &str,
    params: &[u32],
    format: Option<Format>,
) -> Result<String, CliError> {
    let slots = parse_polygon_template(template)?;
    sweep_out(&family_rates(&polygon_family(&slots, params)?)?, format)
}

pub fn sweep_edge(
    m: &CoxeterMatrix,
    spec: &ContractibleEdgeSpec,
    params: &[u32],
    format: Option<Format>,
) -> Result<String, CliError> {
    sweep_out(
        &family_rates(&edge_family_members(m, spec, params)?)?,
        format,
    )
}

#[derive(Serialize)]
struct BallOut {
    radius: usize,
    vertices: usize,
    edges: usize,
    layers: Vec<u64>,
    words: Vec<String>,
}

pub fn oracle_ball(
    m: &CoxeterMatrix,
    radius: usize,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json, Format::Dot])?;
    let b = ball(m, radius)?;
    Ok(match format {
        Format::Dot => format!("{}{}", header(format), b.to_dot()),
        _ => {
            let out = BallOut {
                radius,
                vertices: b.len(),
                edges: b.edges().len() / 2,
                layers: b.layer_counts(),
                words: b.vertices.iter().map(|w| w.to_string()).collect(),
            };
            if format == Format::Json {
                json(&out)
            } else {
                let layers: Vec<String> = out.layers.iter().map(|c| c.to_string()).collect();
                format!(
                    "{}radius: {}\nvertices: {}\nedges: {}\nlayers: {}\n",
                    header(format),
                    radius,
                    out.vertices,
                    out.edges,
                    layers.join(",")
                )
            }
        }
    })
}

pub fn oracle_coeffs(
    m: &CoxeterMatrix,
    m_max: usize,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Csv, Format::Json])?;
    let a: Vec<BigInt> = oracle_coefficients(m, m_max)?
        .into_iter()
        .map(BigInt::from)
        .collect();
    Ok(match format {
        Format::Json => json(&a.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        _ => format!("{}{}", header(format), coefficient_csv(&a)),
    })
}

#[derive(Serialize)]
struct DistanceOut {
    r_max: usize,
    agree_through: usize,
    first_disagreement: Option<usize>,
    v_lower: u64,
    v_upper: Option<u64>,
    d_upper: String,
    d_lower: Option<String>,
}

pub fn oracle_distance(
    m: &CoxeterMatrix,
    other: &CoxeterMatrix,
    r_max: usize,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json])?;
    let d = marked_distance_bound(m, other, r_max)?;
    let out = DistanceOut {
        r_max,
        agree_through: d.agree_through,
        first_disagreement: d.first_disagreement,
        v_lower: d.v_lower,
        v_upper: d.v_upper,
        d_upper: format_f64(d.d_upper),
        d_lower: d.d_lower.map(format_f64),
    };
    if format == Format::Json {
        return Ok(json(&out));
    }
    let opt = |x: Option<String>| x.unwrap_or_else(|| "none".into());
    Ok(format!(
        "{}agree_through: {}\nfirst_disagreement: {}\nv_lower: {}\nv_upper: {}\nd_upper: {}\nd_lower: {}\n",
        header(format),
        out.agree_through,
        opt(out.first_disagreement.map(|r| r.to_string())),
        out.v_lower,
        opt(out.v_upper.map(|v| v.to_string())),
        out.d_upper,
        opt(out.d_lower.clone()),
    ))
}

pub fn oracle_reduce(
    m: &CoxeterMatrix,
    word: &str,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json])?;
    let w: Word = word.parse()?;
    let nf = reduce_word(m, &w)?;
    Ok(match format {
        Format::Json => json(&[w.to_string(), nf.to_string()]),
        _ => format!("{}{} -> {} (length {})\n", header(format), w, nf, nf.len()),
    })
}

pub fn salem_single(
    m: &CoxeterMatrix,
    tol: f64,
    format: Option<Format>,
) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json])?;
    let p = classify_algebraic(m, tol)?;
    if format == Format::Json {
        return Ok(json(&p));
    }
    Ok(format!("{}{}", header(format), profile_text(&p)))
}

fn profile_text(p: &AlgebraicProfile) -> String {
    let stripped: Vec<String> = p
        .stripped
        .iter()
        .map(|(d, k)| format!("Phi_{d}^{k}"))
        .collect();
    let mut s = format!(
        "# numerical evidence at tolerance {}, not a proof\ncandidate: {}\npolynomial: {}\nstripped: {}\n\
         classification: {}\nmax_unit_circle_deviation: {}\nroots: re,im,modulus,residual\n",
        format_f64(p.tolerance),
        p.candidate,
        p.polynomial,
        if stripped.is_empty() { "none".to_string() } else { stripped.join(" ") },
        p.classification,
        format_f64(p.max_unit_circle_deviation),
    );
    for r in &p.roots {
        s.push_str(&format!(
            "{},{},{},{}\n",
            format_f64(r.re),
            format_f64(r.im),
            format_f64(r.modulus),
            format_f64(r.residual)
        ));
    }
    s
}

fn experiment_out(report: &ExperimentReport, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Csv, Format::Json])?;
    Ok(match format {
        Format::Json => json(report),
        _ => {
            let transition = report
                .transition
                .map_or("none".to_string(), |i| format!("index {i}"));
            format!(
                "{}# salem-to-pisot transition: {transition}\n{}",
                header(format),
                report.to_csv()
            )
        }
    })
}

pub fn salem_polygon_family(
    template: &str,
    params: &[u32],
    tol: f64,
    format: Option<Format>,
) -> Result<String, CliError> {
    let slots = parse_polygon_template(template)?;
    let members = polygon_family(&slots, params)?;
    experiment_out(&pisot_limit_experiment(&members, "l", tol)?, format)
}

pub fn salem_edge_family(
    m: &CoxeterMatrix,
    spec: &ContractibleEdgeSpec,
    params: &[u32],
    tol: f64,
    format: Option<Format>,
) -> Result<String, CliError> {
    let members = edge_family_members(m, spec, params)?;
    experiment_out(&pisot_limit_experiment(&members, "m", tol)?, format)
}

pub fn catalog_dump(
    max_rank: u32,
    max_dihedral: u32,
    format: Option<Format>,
) -> Result<String, CliError> {
    pick(format, &[Format::Json])?;
    let entries: Vec<CatalogEntry> = FiniteType::catalog(max_rank, max_dihedral)
        .into_iter()
        .map(CatalogEntry::from)
        .collect();
    Ok(json(&entries))
}
