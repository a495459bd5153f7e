//! Classification tables, multiplicity tables and socle/cell queries, with
//! JSON and TSV renderings.
//!
//! JSON field names are part of the output contract:
//!
//! * classification: `{context: {n, parabolic}, rows: [{w, word, verdict,
//!   thin, a_value, multiplicities: [{y, degree}]}]}`;
//! * multiplicities: `{context, x, engine, rows: [{y, degree, polynomial}],
//!   agree}`.
//!
//! Optional fields are `null` when the quantity does not apply or was not
//! computed. Rows are sorted lexicographically by permutation.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Serialize, Serializer};

use kostant_core::bigrass::socle_descriptor;
use kostant_core::cells::{
    is_small_cell_member, left_cell, penultimate_cell, right_cell, rsk, two_sided_cell,
};
use kostant_core::cupcalc::MaxParContext;
use kostant_core::genpar::{Composition, CompositionContext};
use kostant_core::kl::{KlTable, ParabolicMultiplicities};
use kostant_core::minpar::MinParContext;
use kostant_core::perm::enumerate_group;
use kostant_core::{LaurentPolynomial, Permutation, Verdict};

use crate::{CliError, CliResult, DEFAULT_KL_LIMIT, DEFAULT_N_LIMIT};

/// Which parabolic to classify for: `min:k`, `max:k` or `comp:μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParabolicSpec {
    Min(usize),
    Max(usize),
    Comp(Composition),
}

impl FromStr for ParabolicSpec {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        let bad = || CliError::Usage(format!("expected min:k, max:k or comp:μ, got {s:?}"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "min" => Ok(ParabolicSpec::Min(arg.parse().map_err(|_| bad())?)),
            "max" => Ok(ParabolicSpec::Max(arg.parse().map_err(|_| bad())?)),
            "comp" => Ok(ParabolicSpec::Comp(arg.parse()?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParabolicSpec::Min(k) => write!(f, "min:{k}"),
            ParabolicSpec::Max(k) => write!(f, "max:{k}"),
            ParabolicSpec::Comp(mu) => write!(f, "comp:{mu}"),
        }
    }
}

/// Size limits; `force` lifts both with a warning from the CLI.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub n_max: usize,
    pub kl_max: usize,
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            n_max: DEFAULT_N_LIMIT,
            kl_max: DEFAULT_KL_LIMIT,
            force: false,
        }
    }
}

impl Limits {
    pub fn check_n(&self, n: usize) -> CliResult<()> {
        if n > self.n_max && !self.force {
            return Err(CliError::Limit {
                n,
                limit: self.n_max,
                what: "this command",
            });
        }
        Ok(())
    }

    fn kl_allowed(&self, n: usize) -> bool {
        n <= self.kl_max || self.force
    }

    fn require_kl(&self, n: usize) -> CliResult<()> {
        if !self.kl_allowed(n) {
            return Err(CliError::Limit {
                n,
                limit: self.kl_max,
                what: "Kazhdan-Lusztig tables",
            });
        }
        Ok(())
    }
}

fn verdict_text<S: Serializer>(v: &Verdict, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Context {
    pub n: usize,
    pub parabolic: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub y: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub w: String,
    pub word: Option<String>,
    #[serde(serialize_with = "verdict_text")]
    pub verdict: Verdict,
    pub thin: Option<bool>,
    pub a_value: Option<usize>,
    pub multiplicities: Option<Vec<Factor>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub context: Context,
    pub rows: Vec<Row>,
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl Report {
    pub fn to_json(&self) -> CliResult<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# n={} parabolic={}\nw\tword\tverdict\tthin\ta_value\tmultiplicities\n",
            self.context.n, self.context.parabolic
        );
        for r in &self.rows {
            let mults = r.multiplicities.as_ref().map(|fs| {
                fs.iter()
                    .map(|f| format!("{}@{}", f.y, f.degree))
                    .collect::<Vec<_>>()
                    .join(",")
            });
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.w,
                opt(&r.word),
                r.verdict,
                opt(&r.thin),
                opt(&r.a_value),
                opt(&mults)
            )
            .expect("writing to a String");
        }
        out
    }

    pub fn positives(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Positive)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }
}

fn minimal_composition(n: usize, k: usize) -> Composition {
    let mut parts = vec![1; n - 1];
    parts[k - 1] = 2;
    Composition::new(parts).expect("positive parts")
}

/// The full classification table for one parabolic.
pub fn classify(n: usize, parabolic: &ParabolicSpec, limits: &Limits) -> CliResult<Report> {
    limits.check_n(n)?;
    let mut rows = match parabolic {
        ParabolicSpec::Min(k) => {
            let ctx = MinParContext::new(n, *k)?;
            let table = limits.kl_allowed(n).then(|| KlTable::new(n));
            let thin = table
                .as_ref()
                .map(|t| CompositionContext::new(t, minimal_composition(n, *k)))
                .transpose()?;
            ctx.shortest_reps()
                .map(|w| {
                    Ok(Row {
                        word: None,
                        verdict: if ctx.is_kostant_positive(&w)? {
                            Verdict::Positive
                        } else {
                            Verdict::Negative
                        },
                        thin: thin.as_ref().map(|t| t.is_thin(&w)).transpose()?,
                        a_value: None,
                        multiplicities: None,
                        w: w.to_string(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?
        }
        ParabolicSpec::Max(k) => {
            let ctx = MaxParContext::new(n, *k)?;
            ctx.shortest_reps()
                .map(|w| {
                    let factors = ctx
                        .composition_factors(&w)?
                        .into_iter()
                        .map(|(y, degree)| Factor {
                            y: y.to_string(),
                            degree,
                        })
                        .collect();
                    Ok(Row {
                        word: Some(ctx.phi(&w)?.to_string()),
                        verdict: if ctx.is_kostant_positive(&w)? {
                            Verdict::Positive
                        } else {
                            Verdict::Negative
                        },
                        thin: Some(ctx.is_thin(&w)?),
                        a_value: Some(ctx.a_value(&w)?),
                        multiplicities: Some(factors),
                        w: w.to_string(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?
        }
        ParabolicSpec::Comp(mu) => {
            if mu.n() != n {
                return Err(CliError::Usage(format!(
                    "composition {mu} is not of n = {n}"
                )));
            }
            limits.require_kl(n)?;
            let table = KlTable::new(n);
            let ctx = CompositionContext::new(&table, mu.clone())?;
            mu.shortest_reps()
                .map(|w| {
                    Ok(Row {
                        word: None,
                        verdict: ctx.classify(&w)?,
                        thin: Some(ctx.is_thin(&w)?),
                        a_value: None,
                        multiplicities: None,
                        w: w.to_string(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?
        }
    };
    rows.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(Report {
        context: Context {
            n,
            parabolic: parabolic.to_string(),
        },
        rows,
    })
}

/// Source of graded multiplicities for the maximal parabolic `q_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Cup,
    Kl,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultRow {
    pub y: String,
    /// The grading degree when the multiplicity is a single power of `v`.
    pub degree: Option<i64>,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultTable {
    pub context: Context,
    pub x: String,
    pub engine: Engine,
    pub rows: Vec<MultRow>,
    /// With engine `both`: whether cup diagrams and the KL table give identical rows.
    pub agree: Option<bool>,
}

impl MultTable {
    pub fn to_json(&self) -> CliResult<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# n={} parabolic={} x={} engine={} agree={}\ny\tdegree\tpolynomial\n",
            self.context.n,
            self.context.parabolic,
            self.x,
            self.engine
                .to_possible_value()
                .expect("no skipped variants")
                .get_name(),
            opt(&self.agree)
        );
        for r in &self.rows {
            writeln!(out, "{}\t{}\t{}", r.y, opt(&r.degree), r.polynomial)
                .expect("writing to a String");
        }
        out
    }
}

fn mult_row(y: &Permutation, p: &LaurentPolynomial) -> MultRow {
    MultRow {
        y: y.to_string(),
        degree: p.as_monomial_one(),
        polynomial: p.to_string(),
    }
}

/// Rows `(y, [Δ_x : L_y])` from cup diagrams.
pub fn cup_rows(ctx: &MaxParContext, x: &Permutation) -> CliResult<Vec<MultRow>> {
    Ok(ctx
        .composition_factors(x)?
        .iter()
        .map(|(y, d)| mult_row(y, &LaurentPolynomial::monomial(1, *d as i64)))
        .collect())
}

/// Rows `(y, [Δ_x : L_y])` from the Kazhdan-Lusztig table.
pub fn kl_rows(
    mults: &ParabolicMultiplicities<'_>,
    ctx: &MaxParContext,
    x: &Permutation,
) -> CliResult<Vec<MultRow>> {
    let mut rows = Vec::new();
    for y in ctx.shortest_reps() {
        let p = mults.multiplicity(x, &y)?;
        if !p.is_zero() {
            rows.push(mult_row(&y, &p));
        }
    }
    Ok(rows)
}

pub fn multiplicities(
    n: usize,
    k: usize,
    x: &Permutation,
    engine: Engine,
    limits: &Limits,
) -> CliResult<MultTable> {
    limits.check_n(n)?;
    let ctx = MaxParContext::new(n, k)?;
    if x.n() != n {
        return Err(CliError::Usage(format!("x = {x} is not in S_{n}")));
    }
    if !kostant_core::perm::is_shortest_coset_rep(x, &ctx.parabolic()) {
        return Err(kostant_core::Error::NotShortestRep(x.to_string()).into());
    }
    let kl = || -> CliResult<Vec<MultRow>> {
        limits.require_kl(n)?;
        let table = KlTable::new(n);
        let mults = ParabolicMultiplicities::new(&table, ctx.parabolic())?;
        kl_rows(&mults, &ctx, x)
    };
    let (rows, agree) = match engine {
        Engine::Cup => (cup_rows(&ctx, x)?, None),
        Engine::Kl => (kl()?, None),
        Engine::Both => {
            let cup = cup_rows(&ctx, x)?;
            let agree = cup == kl()?;
            (cup, Some(agree))
        }
    };
    Ok(MultTable {
        context: Context {
            n,
            parabolic: ParabolicSpec::Max(k).to_string(),
        },
        x: x.to_string(),
        engine,
        rows,
        agree,
    })
}

/// Maximal bigrassmannian elements below `w`, lexicographic.
pub fn socle(w: &Permutation, limits: &Limits) -> CliResult<Vec<String>> {
    limits.check_n(w.n())?;
    let mut gens = socle_descriptor(w).generators;
    gens.sort();
    Ok(gens.iter().map(Permutation::to_string).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellInfo {
    pub w: String,
    pub shape: Vec<usize>,
    pub insertion: Vec<Vec<u8>>,
    pub recording: Vec<Vec<u8>>,
    pub right_cell: Vec<String>,
    pub left_cell: Vec<String>,
    pub two_sided_size: usize,
    pub small: bool,
    pub penultimate: bool,
    pub involution: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellSummary {
    pub shape: Vec<usize>,
    pub size: usize,
    /// Number of right cells, which equals the number of left cells and of involutions.
    pub one_sided_cells: usize,
}

fn names(ps: &[Permutation]) -> Vec<String> {
    ps.iter().map(Permutation::to_string).collect()
}

pub fn cell_info(w: &Permutation, limits: &Limits) -> CliResult<CellInfo> {
    limits.check_n(w.n())?;
    let pair = rsk(w);
    Ok(CellInfo {
        w: w.to_string(),
        shape: pair.shape(),
        insertion: pair.p.rows().to_vec(),
        recording: pair.q.rows().to_vec(),
        right_cell: names(&right_cell(w)),
        left_cell: names(&left_cell(w)),
        two_sided_size: two_sided_cell(w).len(),
        small: is_small_cell_member(w),
        penultimate: penultimate_cell(w.n()).contains(w),
        involution: w.is_involution(),
    })
}

/// Two-sided cells of `S_n`, one per partition, largest first part first.
pub fn cell_summary(n: usize, limits: &Limits) -> CliResult<Vec<CellSummary>> {
    limits.check_n(n)?;
    let mut by_shape = std::collections::BTreeMap::<Vec<usize>, (usize, usize)>::new();
    for w in enumerate_group(n) {
        let entry = by_shape.entry(rsk(&w).shape()).or_default();
        entry.0 += 1;
        entry.1 += usize::from(w.is_involution());
    }
    Ok(by_shape
        .into_iter()
        .rev()
        .map(|(shape, (size, involutions))| CellSummary {
            shape,
            size,
            one_sided_cells: involutions,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parabolic_spec_text() {
        for s in ["min:2", "max:3", "comp:2,1,3"] {
            assert_eq!(s.parse::<ParabolicSpec>().unwrap().to_string(), s);
        }
        for s in ["min", "mid:2", "max:x", "comp:2,,1"] {
            assert!(s.parse::<ParabolicSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn classify_examples() {
        let limits = Limits::default();
        let r = classify(4, &ParabolicSpec::Max(2), &limits).unwrap();
        let pos: Vec<_> = r.positives().map(|r| r.w.as_str()).collect();
        assert_eq!(pos, vec!["1234", "3412"]);
        let r = classify(3, &ParabolicSpec::Min(1), &limits).unwrap();
        assert_eq!(
            (r.count(Verdict::Positive), r.count(Verdict::Negative)),
            (2, 1)
        );
        assert!(r.rows.iter().all(|r| r.thin.is_some()));
        let r = classify(5, &ParabolicSpec::Max(2), &limits).unwrap();
        assert_eq!(r.count(Verdict::Positive), 3);
        let r = classify(4, &ParabolicSpec::Comp("2,2".parse().unwrap()), &limits).unwrap();
        assert_eq!(r.count(Verdict::Unknown), 2);
        assert!(classify(4, &ParabolicSpec::Min(4), &limits).is_err());
        assert!(classify(9, &ParabolicSpec::Max(4), &limits).is_err());
        assert!(classify(5, &ParabolicSpec::Comp("2,2".parse().unwrap()), &limits).is_err());
    }

    #[test]
    fn classification_beyond_kl_limit_omits_thinness() {
        let limits = Limits {
            kl_max: 3,
            ..Limits::default()
        };
        let r = classify(4, &ParabolicSpec::Min(2), &limits).unwrap();
        assert!(r.rows.iter().all(|r| r.thin.is_none()));
        assert!(classify(4, &ParabolicSpec::Comp("4".parse().unwrap()), &limits).is_err());
    }

    #[test]
    fn tsv_layout() {
        let r = classify(3, &ParabolicSpec::Max(1), &Limits::default()).unwrap();
        let tsv = r.to_tsv();
        let lines: Vec<_> = tsv.lines().collect();
        assert_eq!(lines[0], "# n=3 parabolic=max:1");
        assert_eq!(lines.len(), 2 + 3);
        assert_eq!(lines[2], "123\t^vv\tPositive\ttrue\t0\t123@0,213@1");
    }

    #[test]
    fn multiplicity_tables() {
        let limits = Limits::default();
        let t = multiplicities(4, 2, &p("1234"), Engine::Both, &limits).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.agree, Some(true));
        let t = multiplicities(4, 2, &p("1324"), Engine::Kl, &limits).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(multiplicities(4, 2, &p("2134"), Engine::Cup, &limits).is_err());
    }

    #[test]
    fn socle_examples() {
        let limits = Limits::default();
        assert!(socle(&Permutation::identity(4), &limits)
            .unwrap()
            .is_empty());
        assert_eq!(socle(&p("1324"), &limits).unwrap(), vec!["1324"]);
    }

    #[test]
    fn cells_summary_counts() {
        let s = cell_summary(4, &Limits::default()).unwrap();
        assert_eq!(s.iter().map(|c| c.size).sum::<usize>(), 24);
        assert_eq!(s.iter().map(|c| c.one_sided_cells).sum::<usize>(), 10);
        let info = cell_info(&p("2314"), &Limits::default()).unwrap();
        assert_eq!(info.shape, vec![3, 1]);
        assert!(info.small && !info.penultimate);
    }
}
