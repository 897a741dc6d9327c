//! Named graph families, their closed-form intervals for the up-color
//! domination number, and an audit that checks the general inequalities on
//! any colored graph.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{
    chromatic_number, clique_cover_number, domination_number, gamma_uc_exact, independence_number,
    minimum_independent_dominating_set, omega_optimal_colorings, omega_uc_min,
    roman_domination_number, Limits,
};
use crate::graph::{ColoredGraph, Coloring, Graph};

/// A member of one of the supported families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}`: centre 0 and `n` leaves.
    Star(usize),
    /// `l` pendant vertices hung on every vertex of the base.
    Hairy(Box<FamilySpec>, usize),
    /// The base plus one vertex adjacent to everything.
    Cone(Box<FamilySpec>),
    /// `K_{n+1}` on `0..=n` where every vertex except 0 is joined to its
    /// own fresh `K_n`.
    CliqueFlower(usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "bipartite:{r},{s}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Hairy(base, l) => write!(f, "hairy:{l}:{base}"),
            FamilySpec::Cone(base) => write!(f, "cone:{base}"),
            FamilySpec::CliqueFlower(n) => write!(f, "flower:{n}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses the compact form used by the command line, e.g. `path:5`,
/// `bipartite:2,3`, `hairy:3:complete:2`, `cone:cycle:4`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("cannot parse family `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        Ok(match kind {
            "path" => FamilySpec::Path(num(rest)?),
            "cycle" => FamilySpec::Cycle(num(rest)?),
            "complete" => FamilySpec::Complete(num(rest)?),
            "bipartite" => {
                let (r, t) = rest.split_once(',').ok_or_else(bad)?;
                FamilySpec::CompleteBipartite(num(r)?, num(t)?)
            }
            "star" => FamilySpec::Star(num(rest)?),
            "hairy" => {
                let (l, base) = rest.split_once(':').ok_or_else(bad)?;
                FamilySpec::Hairy(Box::new(base.parse()?), num(l)?)
            }
            "cone" => FamilySpec::Cone(Box::new(rest.parse()?)),
            "flower" => FamilySpec::CliqueFlower(num(rest)?),
            _ => return Err(Error::UnsupportedFamily(kind.to_string())),
        })
    }
}

/// A generated graph with the family's canonical coloring, when it has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Family {
    pub graph: Graph,
    pub coloring: Option<Coloring>,
}

fn clique_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}

pub fn generate(spec: &FamilySpec) -> Result<Family> {
    let bad = |msg: &str| Err(Error::BadParameters(format!("{spec}: {msg}")));
    let (n, edges, coloring): (usize, Vec<(usize, usize)>, Option<Vec<u32>>) = match *spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return bad("need n >= 1");
            }
            let edges = (1..n).map(|v| (v - 1, v)).collect();
            (n, edges, Some((0..n).map(|v| (v % 2) as u32).collect()))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return bad("need n >= 3");
            }
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            let mut colors: Vec<u32> = (0..n).map(|v| (v % 2) as u32).collect();
            if n % 2 == 1 {
                colors[n - 1] = 2;
            }
            (n, edges, Some(colors))
        }
        FamilySpec::Complete(n) => {
            if n == 0 {
                return bad("need n >= 1");
            }
            let all: Vec<usize> = (0..n).collect();
            (n, clique_edges(&all), Some((0..n as u32).collect()))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            if r == 0 || s == 0 {
                return bad("need r, s >= 1");
            }
            let edges = (0..r)
                .flat_map(|u| (r..r + s).map(move |v| (u, v)))
                .collect();
            let colors = (0..r + s).map(|v| u32::from(v >= r)).collect();
            (r + s, edges, Some(colors))
        }
        FamilySpec::Star(n) => {
            if n == 0 {
                return bad("need n >= 1");
            }
            let edges = (1..=n).map(|v| (0, v)).collect();
            let colors = (0..=n).map(|v| u32::from(v == 0)).collect();
            (n + 1, edges, Some(colors))
        }
        FamilySpec::Hairy(ref base, l) => {
            let base = generate(base)?.graph;
            let m = base.n();
            let mut edges = base.edges().to_vec();
            for v in 0..m {
                for j in 0..l {
                    edges.push((v, m + v * l + j));
                }
            }
            (m * (l + 1), edges, None)
        }
        FamilySpec::Cone(ref base) => {
            let base = generate(base)?.graph;
            let m = base.n();
            let mut edges = base.edges().to_vec();
            edges.extend((0..m).map(|v| (v, m)));
            (m + 1, edges, None)
        }
        FamilySpec::CliqueFlower(k) => {
            if k == 0 {
                return bad("need n >= 1");
            }
            let core: Vec<usize> = (0..=k).collect();
            let mut edges = clique_edges(&core);
            let mut next = k + 1;
            for i in 1..=k {
                let petal: Vec<usize> = (next..next + k).collect();
                next += k;
                edges.extend(clique_edges(&petal));
                edges.extend(petal.iter().map(|&p| (i, p)));
            }
            (next, edges, None)
        }
    };
    Ok(Family {
        graph: Graph::new(n, &edges)?,
        coloring: coloring.map(Coloring::new),
    })
}

/// Which colorings a formula is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    Any,
    /// Colorings with exactly `chi` colors.
    Optimal,
}

/// Predicted range of the up-color domination number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormulaBounds {
    Interval { lo: usize, hi: usize },
    TwoValues { a: usize, b: usize },
}

impl FormulaBounds {
    pub fn contains(&self, x: usize) -> bool {
        match *self {
            FormulaBounds::Interval { lo, hi } => lo <= x && x <= hi,
            FormulaBounds::TwoValues { a, b } => x == a || x == b,
        }
    }
}

impl fmt::Display for FormulaBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaBounds::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            FormulaBounds::TwoValues { a, b } => write!(f, "{{{a}, {b}}}"),
        }
    }
}

pub fn family_formula_bounds(spec: &FamilySpec, kind: ColoringKind) -> Result<FormulaBounds> {
    use ColoringKind::*;
    let (lo, hi) = match (spec, kind) {
        (FamilySpec::Path(n), Any) => (n.div_ceil(3), n.div_ceil(2)),
        (FamilySpec::Path(n), Optimal) => (n / 2, n.div_ceil(2)),
        (FamilySpec::Cycle(n), _) => (n.div_ceil(3), n / 2),
        (&FamilySpec::CompleteBipartite(r, s), Any) => {
            // The domination number of K_{r,s} is 2 once both sides have two
            // vertices; a side of one vertex dominates on its own.
            let gamma = if r.min(s) == 1 { 1 } else { 2 };
            (gamma, r.max(s))
        }
        (&FamilySpec::CompleteBipartite(r, s), Optimal) => {
            return Ok(FormulaBounds::TwoValues {
                a: r.min(s),
                b: r.max(s),
            })
        }
        _ => return Err(Error::UnsupportedFamily(spec.to_string())),
    };
    Ok(FormulaBounds::Interval { lo, hi })
}

/// One inequality `left <= right`, checked with exact integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub left: u64,
    pub right: u64,
    pub holds: bool,
    pub statement: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub checks: Vec<BoundCheck>,
    /// Why some checks were left out, if any were.
    pub skipped: Vec<String>,
}

impl BoundReport {
    fn le(&mut self, name: &'static str, left: u64, right: u64, statement: &'static str) {
        self.checks.push(BoundCheck {
            name,
            left,
            right,
            holds: left <= right,
            statement,
        });
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Smallest graph on which the weight bounds (which assume a connected
/// graph of reasonable size) are audited.
pub const WEIGHT_AUDIT_MIN_N: usize = 5;

/// Evaluates every general inequality on `(G, c)`. Checks over all colorings
/// run only for connected graphs with at least [`WEIGHT_AUDIT_MIN_N`]
/// vertices that fit the coloring-search limit.
pub fn audit_bounds(cg: &ColoredGraph, limits: &Limits) -> Result<BoundReport> {
    let g = cg.graph();
    let n = g.n() as u64;
    let mut report = BoundReport::default();
    let gamma = domination_number(g, limits)? as u64;
    let i = minimum_independent_dominating_set(g, limits)?.len() as u64;
    let alpha = independence_number(g, limits)? as u64;
    let (chi, _) = chromatic_number(g, limits)?;
    let chi = chi as u64;
    let theta = clique_cover_number(g, limits)? as u64;

    let uc = gamma_uc_exact(cg, limits)?;
    if uc.feasible {
        let gamma_uc = uc.size as u64;
        let top = cg.coloring().top_class().len() as u64;
        let maxima = cg.local_maxima().len() as u64;
        report.le(
            "top_class",
            top,
            gamma_uc,
            "the top color class lies in every up-color dominating set",
        );
        report.le(
            "local_maxima",
            maxima,
            gamma_uc,
            "local maxima lie in every up-color dominating set",
        );
        report.le(
            "gamma_le_gamma_uc",
            gamma,
            gamma_uc,
            "an up-color dominating set dominates",
        );
        report.le(
            "gamma_uc_le_theta",
            gamma_uc,
            theta,
            "the top of each clique in a clique cover dominates it",
        );
    } else {
        report
            .skipped
            .push("coloring is infeasible: fixed-coloring checks skipped".into());
    }
    report.le(
        "gamma_le_i",
        gamma,
        i,
        "independent domination is domination",
    );
    report.le(
        "i_le_alpha",
        i,
        alpha,
        "a minimal independent dominating set is independent",
    );

    let n_usize = g.n();
    if n_usize < WEIGHT_AUDIT_MIN_N || !g.is_connected() {
        report.skipped.push(format!(
            "weight chain needs a connected graph with n >= {WEIGHT_AUDIT_MIN_N}"
        ));
        return Ok(report);
    }
    if n_usize > limits.coloring {
        report.skipped.push(format!(
            "weight chain skipped: n = {n_usize} exceeds coloring limit {}",
            limits.coloring
        ));
        return Ok(report);
    }
    let omega = omega_uc_min(g, limits)?.value;
    report.le(
        "chi_minus_one_le_omega",
        chi - 1,
        omega,
        "the top color is paid at least once",
    );
    report.le(
        "gamma_le_omega",
        gamma,
        omega,
        "every member weighs at least 1",
    );
    // 2 * Omega <= 3 (chi - 1) gamma, i.e. Omega <= 3/2 (chi - 1) gamma.
    report.le(
        "omega_le_three_halves",
        2 * omega,
        3 * (chi - 1) * gamma,
        "class-lifting coloring",
    );
    report.le(
        "omega_le_i_chi",
        omega,
        i * chi,
        "an independent dominating set on top",
    );
    report.le("gernert", 4 * i * chi, n * n, "i * chi <= n^2 / 4");
    let cone = !g.universal_vertices().is_empty();
    let tight = omega == chi - 1;
    report.le(
        "tight_implies_cone",
        u64::from(tight),
        u64::from(cone),
        "Omega = chi - 1 only for cones",
    );
    report.le(
        "cone_implies_tight",
        u64::from(cone),
        u64::from(tight),
        "cones reach Omega = chi - 1",
    );
    Ok(report)
}

/// Both weights and how they compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RomanComparison {
    pub omega_uc: u64,
    pub gamma_r: u64,
    #[serde(serialize_with = "relation_symbol")]
    pub relation: Ordering,
}

fn relation_symbol<S: Serializer>(o: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    })
}

pub fn roman_comparison(g: &Graph, limits: &Limits) -> Result<RomanComparison> {
    let omega_uc = omega_uc_min(g, limits)?.value;
    let gamma_r = roman_domination_number(g, limits)? as u64;
    Ok(RomanComparison {
        omega_uc,
        gamma_r,
        relation: omega_uc.cmp(&gamma_r),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HairyFloor {
    pub omega_uc: u64,
    /// Fewest colors among the optimal normalized colorings.
    pub floor: usize,
    pub optimal_colorings: usize,
}

/// Enumerates every weight-optimal normalized coloring of `hairy(base, l)`
/// and reports the smallest number of colors among them.
pub fn hairy_color_floor(base: &FamilySpec, l: usize, limits: &Limits) -> Result<HairyFloor> {
    let g = generate(&FamilySpec::Hairy(Box::new(base.clone()), l))?.graph;
    if g.n() > limits.coloring.min(64) {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: limits.coloring,
        });
    }
    let optimal = omega_optimal_colorings(&g, true)?;
    let omega_uc = optimal
        .first()
        .map(|(w, _)| *w)
        .ok_or_else(|| Error::Infeasible("empty graph".into()))?;
    let floor = optimal
        .iter()
        .map(|(_, c)| c.color_count())
        .min()
        .unwrap_or(0);
    Ok(HairyFloor {
        omega_uc,
        floor,
        optimal_colorings: optimal.len(),
    })
}
