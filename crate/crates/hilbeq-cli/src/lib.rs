//! File formats and input grammars for the command-line front end.
//!
//! Equation sets travel in two self-describing formats: a line-oriented
//! text form and a JSON form.  Points of the Grassmannian are read either
//! as a CSV of rationals (header = monomial labels of the degree-`r`
//! basis) or as a plain list of degree-`r` monomials spanning a monomial
//! ideal.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use hilbeq::equations::{EquationSet, Family};
use hilbeq::hilbpoly::HilbertPolynomialContext;
use hilbeq::monom::Monomial;
use hilbeq::plucker::{DeltaPolynomial, TermJson};
use hilbeq::verify::{RationalMatrix, RationalSubspace};
use hilbeq::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A polynomial in `t` with rational coefficients, e.g. `2`, `3t+1`,
/// `1/2*t^2+3/2*t+1`.  Whitespace is insignificant; `*` is optional
/// between a coefficient and `t`.
pub fn parse_p_polynomial(input: &str) -> Result<Vec<BigRational>> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let bytes = compact.as_bytes();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let mut negative = false;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                negative = !negative;
            }
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &compact[start..pos];
        if term.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        let (coeff_txt, t_part) = match term.find('t') {
            Some(i) => (&term[..i], Some(&term[i + 1..])),
            None => (term, None),
        };
        let coeff_txt = coeff_txt.strip_suffix('*').unwrap_or(coeff_txt);
        let coeff = if coeff_txt.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coeff_txt)?
        };
        let coeff = if negative { -coeff } else { coeff };
        let power: usize = match t_part {
            None => 0,
            Some("") => 1,
            Some(p) => {
                let p = p
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                p.parse()
                    .map_err(|_| Error::Parse(format!("bad power in `{term}`")))?
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += coeff;
    }
    Ok(coeffs)
}

/// A rational literal `a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
        let den = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    } else {
        let v = BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        Ok(BigRational::from(v))
    }
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An equation set together with the context it was generated in.
#[derive(Debug, Clone)]
pub struct EquationFile {
    pub family: Family,
    pub n: u32,
    pub p_coeffs: Vec<BigRational>,
    pub r: u32,
    pub delta_degree: usize,
    pub polynomials: Vec<DeltaPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct EquationFileJson {
    family: String,
    n: u32,
    p_coeffs: Vec<String>,
    r: u32,
    delta_degree: usize,
    count: usize,
    polynomials: Vec<Vec<TermJson>>,
}

impl EquationFile {
    pub fn new(ctx: &HilbertPolynomialContext, p_coeffs: Vec<BigRational>, set: EquationSet) -> Self {
        EquationFile {
            family: set.family,
            n: ctx.n(),
            p_coeffs,
            r: ctx.r(),
            delta_degree: set.delta_degree,
            polynomials: set.polynomials,
        }
    }

    pub fn context(&self) -> Result<HilbertPolynomialContext> {
        let ctx = HilbertPolynomialContext::gotzmann_decompose(&self.p_coeffs, self.n)?;
        if ctx.r() != self.r {
            return Err(Error::Parse(format!(
                "file says r = {}, polynomial gives r = {}",
                self.r,
                ctx.r()
            )));
        }
        Ok(ctx)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family: {}\n", self.family));
        out.push_str(&format!("n: {}\n", self.n));
        let coeffs: Vec<String> = self.p_coeffs.iter().map(rational_to_string).collect();
        out.push_str(&format!("p_coeffs: {}\n", coeffs.join(", ")));
        out.push_str(&format!("r: {}\n", self.r));
        out.push_str(&format!("delta_degree: {}\n", self.delta_degree));
        out.push_str(&format!("count: {}\n", self.polynomials.len()));
        for p in &self.polynomials {
            out.push_str(&p.to_text());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        let mut lines = input.lines();
        let mut header = std::collections::HashMap::new();
        let mut polys = Vec::new();
        let mut count: Option<usize> = None;
        for line in lines.by_ref() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once(':') {
                let key = key.trim();
                if ["family", "n", "p_coeffs", "r", "delta_degree", "count"].contains(&key) {
                    header.insert(key.to_string(), value.trim().to_string());
                    if key == "count" {
                        count = Some(
                            value
                                .trim()
                                .parse()
                                .map_err(|_| Error::Parse("bad count".into()))?,
                        );
                        break;
                    }
                    continue;
                }
            }
            return Err(Error::Parse(format!("unexpected header line `{line}`")));
        }
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            polys.push(DeltaPolynomial::parse_text(line)?);
        }
        let get = |k: &str| {
            header
                .get(k)
                .ok_or_else(|| Error::Parse(format!("missing header `{k}`")))
        };
        let family = Family::from_tag(get("family")?)?;
        let n: u32 = get("n")?
            .parse()
            .map_err(|_| Error::Parse("bad n".into()))?;
        let r: u32 = get("r")?
            .parse()
            .map_err(|_| Error::Parse("bad r".into()))?;
        let delta_degree: usize = get("delta_degree")?
            .parse()
            .map_err(|_| Error::Parse("bad delta_degree".into()))?;
        let p_coeffs = get("p_coeffs")?
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if let Some(c) = count {
            if c != polys.len() {
                return Err(Error::Parse(format!(
                    "count says {c}, found {} polynomials",
                    polys.len()
                )));
            }
        }
        Ok(EquationFile { family, n, p_coeffs, r, delta_degree, polynomials: polys })
    }

    pub fn to_json(&self) -> String {
        let json = EquationFileJson {
            family: self.family.tag().to_string(),
            n: self.n,
            p_coeffs: self.p_coeffs.iter().map(rational_to_string).collect(),
            r: self.r,
            delta_degree: self.delta_degree,
            count: self.polynomials.len(),
            polynomials: self.polynomials.iter().map(|p| p.to_json_terms()).collect(),
        };
        let mut s = serde_json::to_string_pretty(&json).expect("serializable");
        s.push('\n');
        s
    }

    pub fn parse_json(input: &str) -> Result<Self> {
        let json: EquationFileJson =
            serde_json::from_str(input).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
        let polynomials = json
            .polynomials
            .iter()
            .map(|terms| DeltaPolynomial::from_json_terms(terms))
            .collect::<Result<Vec<_>>>()?;
        if json.count != polynomials.len() {
            return Err(Error::Parse(format!(
                "count says {}, found {} polynomials",
                json.count,
                polynomials.len()
            )));
        }
        Ok(EquationFile {
            family: Family::from_tag(&json.family)?,
            n: json.n,
            p_coeffs: json.p_coeffs.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
            r: json.r,
            delta_degree: json.delta_degree,
            polynomials,
        })
    }

    /// Dispatches on content: JSON when the first non-space byte is `{`.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            Self::parse_json(input)
        } else {
            Self::parse_text(input)
        }
    }
}

/// Reads a point file: either a CSV whose header row lists the monomial
/// labels of the degree-`r` basis followed by `q(r)` rows of rationals, or
/// a list of `q(r)` degree-`r` monomials (whitespace or comma separated).
pub fn parse_point_file(input: &str, ctx: &HilbertPolynomialContext) -> Result<RationalSubspace> {
    let pc = hilbeq::plucker::PlueckerContext::new(ctx)?;
    let basis = pc.basis_r();
    let labels: Vec<String> = basis.monomials().iter().map(|m| m.to_string()).collect();
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        return Err(Error::Parse("empty point file".into()));
    }
    let header: Vec<String> = lines[0].split(',').map(|t| t.trim().to_string()).collect();
    if header == labels {
        let mut rows = Vec::new();
        for line in &lines[1..] {
            let row = line
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            if row.len() != labels.len() {
                return Err(Error::Parse(format!(
                    "row has {} entries, expected {}",
                    row.len(),
                    labels.len()
                )));
            }
            rows.push(row);
        }
        let matrix = RationalMatrix::from_rows(rows)?;
        return RationalSubspace::new(ctx, matrix);
    }
    // monomial-ideal spec: every token is a degree-r monomial
    let mut monomials = Vec::new();
    for line in &lines {
        for token in line.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let m = Monomial::parse(token, ctx.n())?;
            if m.degree() != ctx.r() {
                return Err(Error::Parse(format!(
                    "monomial {m} has degree {}, expected {}",
                    m.degree(),
                    ctx.r()
                )));
            }
            monomials.push(m);
        }
    }
    RationalSubspace::from_monomials(ctx, &monomials)
}

/// The CSV form of a subspace, with the basis labels as header.
pub fn point_to_csv(subspace: &RationalSubspace) -> String {
    let basis = subspace.context().basis_r();
    let labels: Vec<String> = basis.monomials().iter().map(|m| m.to_string()).collect();
    let mut out = labels.join(",");
    out.push('\n');
    for i in 0..subspace.matrix().rows() {
        let row: Vec<String> = subspace.matrix().row(i).iter().map(rational_to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// `x2:1,2,6` -> row label (variable index, multi-index).
pub fn parse_row_spec(spec: &str) -> Result<(usize, hilbeq::exterior::MultiIndex)> {
    let (var, idx) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad row spec `{spec}` (want x<i>:j1,j2,...)")))?;
    let var = var
        .trim()
        .strip_prefix('x')
        .ok_or_else(|| Error::Parse(format!("bad variable `{var}`")))?
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad variable `{var}`")))?;
    let indices = idx
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad index `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((var, hilbeq::exterior::MultiIndex::new(indices)?))
}

/// `x2:4:1,2,3,4,5,6;x1:2:1,3,4,6;x0:3:2,3,4,5,6` -> a wedge tuple, one
/// `(m, J)` entry per variable.  Omitted variables get `m = 0`.
pub fn parse_tuple_spec(spec: &str, n: u32) -> Result<hilbeq::equations::BayerTuple> {
    let mut tuple: Vec<(usize, hilbeq::exterior::MultiIndex)> =
        vec![(0, hilbeq::exterior::MultiIndex::empty()); n as usize + 1];
    let mut seen = vec![false; n as usize + 1];
    for entry in spec.split(';') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let mut parts = entry.splitn(3, ':');
        let var = parts
            .next()
            .and_then(|v| v.trim().strip_prefix('x'))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad tuple entry `{entry}`")))?;
        if var > n as usize {
            return Err(Error::Parse(format!("variable x{var} out of range")));
        }
        if seen[var] {
            return Err(Error::Parse(format!("variable x{var} listed twice")));
        }
        seen[var] = true;
        let m: usize = parts
            .next()
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad tuple entry `{entry}`")))?;
        let j = match parts.next() {
            None | Some("") => hilbeq::exterior::MultiIndex::empty(),
            Some(list) => hilbeq::exterior::MultiIndex::new(
                list.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad index `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            )?,
        };
        tuple[var] = (m, j);
    }
    Ok(tuple)
}
