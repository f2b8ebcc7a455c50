//! Recipes: named library operations applied to literal (or nested) arguments.
//!
//! ```json
//! {"op": "hirzebruch_h0", "args": [1, 4, 8]}
//! {"op": "sub", "args": [{"op": "hirzebruch_h0", "args": [5, 3, 15]}, 1]}
//! ```
//!
//! Literal integers are capped at `±MAX_LITERAL` and lists at `MAX_LIST`
//! entries so that arbitrary manifests evaluate quickly and without panics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::curves;
use crate::error::{Error, Result};
use crate::moduli::{self, LabeledSum, LocusDescriptor};
use crate::mukai;
use crate::series;
use crate::surfaces::{self, HirzebruchDivisor, QuadricDivisor, Singularity, SingularityBudget, SurfaceKind};
use crate::wps::{self, WeightedCompleteIntersection};

const MAX_LITERAL: i64 = 10_000;
const MAX_LIST: usize = 64;
const MAX_DEPTH: usize = 16;

/// Result of a recipe, and the type of a claim's expected value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Tuple(Vec<i64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(v) => write!(f, "{v}"),
            Value::Tuple(vs) => {
                let items: Vec<String> = vs.iter().map(i64::to_string).collect();
                write!(f, "({})", items.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    pub op: String,
    #[serde(default)]
    pub args: Vec<Arg>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Arg {
    Int(i64),
    Text(String),
    Ints(Vec<i64>),
    Part { label: String, value: Box<Arg> },
    Call(Box<Recipe>),
}

pub const KNOWN_OPS: &[&str] = &[
    // series and weighted complete intersections
    "binomial",
    "h_proj",
    "monomial_count",
    "section_count",
    "canonical_weight",
    "fano_index",
    "extension",
    // curves
    "k3_curve_genus",
    "ci_curve_genus",
    "clifford_restriction",
    "clifford_general",
    "exceptional_low",
    "max_k_for_genus",
    "rr_h0",
    "serre_h1",
    "h0_nonspecial",
    "clifford_h0_bound",
    "castelnuovo_genus",
    "theta_degree",
    "expected_theta_codim",
    "plane_curve_genus",
    "same_parity",
    // surfaces
    "hirzebruch_intersect",
    "hirzebruch_h0",
    "hirzebruch_pa",
    "hirzebruch_adjoint",
    "quadric_h0",
    "quadric_pa",
    "quadric_adjoint",
    "delpezzo_h0",
    "geometric_genus",
    "plane_model_genus",
    "plane_model_degree",
    "aut_dim",
    // moduli
    "locus_dim",
    "remarkable_difference",
    "fibre_dim_ci",
    "ideal_sheaf_h0",
    "scenario",
    // Mukai models
    "mukai_record",
    "grassmann_dim",
    "moduli_map_check",
    "ic_family_check",
    "cork_general",
    "ribbon_space_dim",
    // arithmetic glue
    "add",
    "sub",
    "mul",
    "div_floor",
    "gt",
    "le",
    "tuple",
    "nth",
];

/// Evaluates a recipe against the library.
pub fn evaluate(recipe: &Recipe) -> Result<Value> {
    eval(recipe, 0)
}

pub(crate) fn validate(recipe: &Recipe, depth: usize) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::Manifest(format!("recipes nest deeper than {MAX_DEPTH}")));
    }
    if !KNOWN_OPS.contains(&recipe.op.as_str()) {
        return Err(Error::Manifest(format!("unknown operation {:?}", recipe.op)));
    }
    fn walk(arg: &Arg, depth: usize) -> Result<()> {
        match arg {
            Arg::Call(inner) => validate(inner, depth + 1),
            Arg::Part { value, .. } => walk(value, depth),
            _ => Ok(()),
        }
    }
    recipe.args.iter().try_for_each(|a| walk(a, depth))
}

struct Args<'a> {
    op: &'a str,
    args: &'a [Arg],
    depth: usize,
}

impl<'a> Args<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Recipe { op: self.op.to_string(), message: message.into() }
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.args.len() != n {
            return Err(self.err(format!("expected {n} arguments, got {}", self.args.len())));
        }
        Ok(())
    }

    fn get(&self, i: usize) -> Result<&'a Arg> {
        self.args.get(i).ok_or_else(|| self.err(format!("missing argument {i}")))
    }

    fn value(&self, arg: &Arg) -> Result<Option<Value>> {
        match arg {
            Arg::Call(inner) => eval(inner, self.depth + 1).map(Some),
            Arg::Int(v) => {
                if v.abs() > MAX_LITERAL {
                    return Err(self.err(format!("literal {v} outside ±{MAX_LITERAL}")));
                }
                Ok(Some(Value::Int(*v)))
            }
            Arg::Ints(vs) => {
                if vs.len() > MAX_LIST || vs.iter().any(|v| v.abs() > MAX_LITERAL) {
                    return Err(self.err(format!("list literal exceeds {MAX_LIST} entries or ±{MAX_LITERAL}")));
                }
                Ok(Some(Value::Tuple(vs.clone())))
            }
            _ => Ok(None),
        }
    }

    fn int(&self, i: usize) -> Result<i64> {
        match self.value(self.get(i)?)? {
            Some(Value::Int(v)) => Ok(v),
            _ => Err(self.err(format!("argument {i} must be an integer"))),
        }
    }

    fn ints(&self, i: usize) -> Result<Vec<i64>> {
        match self.value(self.get(i)?)? {
            Some(Value::Tuple(v)) => Ok(v),
            _ => Err(self.err(format!("argument {i} must be an integer list"))),
        }
    }

    fn positive_list(&self, i: usize) -> Result<Vec<u64>> {
        let v = self.ints(i)?;
        if v.iter().any(|&x| x < 1) {
            return Err(self.err(format!("argument {i} must contain positive entries")));
        }
        Ok(v.into_iter().map(|x| x as u64).collect())
    }

    fn non_negative(&self, i: usize) -> Result<u64> {
        let v = self.int(i)?;
        u64::try_from(v).map_err(|_| self.err(format!("argument {i} must be non-negative")))
    }

    fn text(&self, i: usize) -> Result<&'a str> {
        match self.get(i)? {
            Arg::Text(s) => Ok(s),
            _ => Err(self.err(format!("argument {i} must be a string"))),
        }
    }

    fn all_ints(&self) -> Result<Vec<i64>> {
        (0..self.args.len()).map(|i| self.int(i)).collect()
    }

    fn pair(&self, i: usize) -> Result<(i64, i64)> {
        match self.ints(i)?.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => Err(self.err(format!("argument {i} must be a pair [a, b]"))),
        }
    }
}

fn big(op: &'static str, v: BigInt) -> Result<Value> {
    v.to_i64().map(Value::Int).ok_or(Error::Overflow(op))
}

fn tuple2((a, b): (i64, i64)) -> Value {
    Value::Tuple(vec![a, b])
}

fn eval(recipe: &Recipe, depth: usize) -> Result<Value> {
    if depth > MAX_DEPTH {
        return Err(Error::Recipe { op: recipe.op.clone(), message: "recipe nests too deeply".into() });
    }
    let a = Args { op: &recipe.op, args: &recipe.args, depth };
    let int = |v: i64| Ok(Value::Int(v));
    match recipe.op.as_str() {
        "binomial" => {
            a.arity(2)?;
            big("binomial", series::binomial(a.non_negative(0)?, a.int(1)?))
        }
        "h_proj" => {
            a.arity(2)?;
            big("h_proj", series::h_proj(a.non_negative(0)?, a.int(1)?))
        }
        "monomial_count" => {
            a.arity(2)?;
            big("monomial_count", series::ratio_coefficient(&[], &a.positive_list(0)?, a.int(1)?)?)
        }
        "section_count" => {
            a.arity(3)?;
            let x = WeightedCompleteIntersection::new(a.positive_list(0)?, a.positive_list(1)?)?;
            big("section_count", x.section_count(a.int(2)?))
        }
        "canonical_weight" => {
            a.arity(2)?;
            int(WeightedCompleteIntersection::new(a.positive_list(0)?, a.positive_list(1)?)?.canonical_weight())
        }
        "fano_index" => {
            a.arity(3)?;
            let x = WeightedCompleteIntersection::new(a.positive_list(0)?, a.positive_list(1)?)?;
            int(x.fano_index(a.int(2)?)?)
        }
        "extension" => {
            a.arity(1)?;
            let r = wps::universal_extension_check(&wps::extension_case_by_name(a.text(0)?)?)?;
            Ok(Value::Tuple(vec![r.dimension, r.index, r.target]))
        }
        "k3_curve_genus" => {
            a.arity(2)?;
            int(curves::k3_curve_genus(a.int(0)?, a.int(1)?)?)
        }
        "ci_curve_genus" => {
            a.arity(2)?;
            int(curves::ci_curve_genus(a.int(0)?, &a.ints(1)?)?)
        }
        "clifford_restriction" => {
            a.arity(3)?;
            int(curves::clifford_restriction(a.int(0)?, a.int(1)?, a.int(2)?)?)
        }
        "clifford_general" => {
            a.arity(2)?;
            int(curves::clifford_general(a.int(0)?, a.int(1)?)?)
        }
        "exceptional_low" => {
            a.arity(2)?;
            Ok(Value::Bool(curves::exceptional_low(a.int(0)?, a.int(1)?)?))
        }
        "max_k_for_genus" => {
            a.arity(2)?;
            int(curves::max_k_for_genus(a.int(0)?, a.int(1)?)?)
        }
        "rr_h0" => {
            a.arity(3)?;
            int(curves::rr_h0(a.int(0)?, a.int(1)?, a.int(2)?))
        }
        "serre_h1" => {
            a.arity(3)?;
            int(curves::serre_h1(a.int(0)?, a.int(1)?, a.int(2)?))
        }
        "h0_nonspecial" => {
            a.arity(2)?;
            int(curves::h0_nonspecial(a.int(0)?, a.int(1)?)?)
        }
        "clifford_h0_bound" => {
            a.arity(1)?;
            int(curves::clifford_h0_bound(a.int(0)?)?)
        }
        "castelnuovo_genus" => {
            a.arity(2)?;
            int(curves::castelnuovo_genus(a.int(0)?, a.int(1)?)?)
        }
        "theta_degree" => {
            a.arity(2)?;
            int(curves::theta_degree(a.int(0)?, a.int(1)?)?)
        }
        "expected_theta_codim" => {
            a.arity(1)?;
            int(curves::expected_theta_codim(a.int(0)?)?)
        }
        "plane_curve_genus" => {
            a.arity(1)?;
            int(curves::plane_curve_genus(a.int(0)?)?)
        }
        "same_parity" => {
            a.arity(2)?;
            Ok(Value::Bool(curves::same_parity(a.int(0)?, a.int(1)?)))
        }
        // Hirzebruch ops take n first, then the class coefficients of C_0 and f
        "hirzebruch_intersect" => {
            a.arity(3)?;
            let n = a.int(0)?;
            let (a1, b1) = a.pair(1)?;
            let (a2, b2) = a.pair(2)?;
            int(HirzebruchDivisor::new(a1, b1, n)?.intersect(&HirzebruchDivisor::new(a2, b2, n)?)?)
        }
        "hirzebruch_h0" => {
            a.arity(3)?;
            int(HirzebruchDivisor::new(a.int(1)?, a.int(2)?, a.int(0)?)?.h0())
        }
        "hirzebruch_pa" => {
            a.arity(3)?;
            int(HirzebruchDivisor::new(a.int(1)?, a.int(2)?, a.int(0)?)?.arithmetic_genus())
        }
        "hirzebruch_adjoint" => {
            a.arity(3)?;
            let d = HirzebruchDivisor::new(a.int(1)?, a.int(2)?, a.int(0)?)?.adjoint();
            Ok(tuple2((d.a, d.b)))
        }
        "quadric_h0" => {
            a.arity(2)?;
            int(surfaces::quadric_h0(a.int(0)?, a.int(1)?))
        }
        "quadric_pa" => {
            a.arity(2)?;
            int(surfaces::quadric_pa(a.int(0)?, a.int(1)?))
        }
        "quadric_adjoint" => {
            a.arity(2)?;
            let d = QuadricDivisor::new(a.int(0)?, a.int(1)?);
            Ok(tuple2((d.a - 2, d.b - 2)))
        }
        "delpezzo_h0" => {
            a.arity(2)?;
            int(surfaces::delpezzo_h0(a.int(0)?, a.int(1)?)?)
        }
        // arithmetic genus, then counts of nodes, cusps and ordinary triple points
        "geometric_genus" => {
            a.arity(4)?;
            let count = |i: usize| -> Result<u32> {
                u32::try_from(a.int(i)?).map_err(|_| a.err(format!("argument {i} must be a non-negative count")))
            };
            let budget = SingularityBudget::new()
                .with(Singularity::Node, count(1)?)
                .with(Singularity::Cusp, count(2)?)
                .with(Singularity::OrdinaryTriplePoint, count(3)?);
            int(surfaces::geometric_genus(a.int(0)?, &budget)?)
        }
        "plane_model_genus" => {
            a.arity(2)?;
            int(surfaces::plane_model_genus(a.int(0)?, &a.ints(1)?)?)
        }
        "plane_model_degree" => {
            a.arity(2)?;
            int(surfaces::plane_model_anticanonical_degree(a.int(0)?, &a.ints(1)?)?)
        }
        "aut_dim" => {
            a.arity(1)?;
            int(surfaces::aut_dim(a.text(0)?.parse::<SurfaceKind>()?)?)
        }
        "locus_dim" => {
            a.arity(2)?;
            int(moduli::locus_dim(&LocusDescriptor::from_parts(a.text(0)?, &a.ints(1)?)?)?)
        }
        "remarkable_difference" => {
            a.arity(1)?;
            int(moduli::remarkable_difference(a.int(0)?)?)
        }
        "fibre_dim_ci" => {
            a.arity(2)?;
            int(moduli::fibre_dim_ci(a.int(0)?, a.int(1)?)?)
        }
        "ideal_sheaf_h0" => {
            a.arity(3)?;
            int(moduli::ideal_sheaf_h0(a.int(0)?, &a.ints(1)?, a.int(2)?)?)
        }
        "scenario" => {
            if a.args.is_empty() || a.args.len() > MAX_LIST {
                return Err(a.err("expected between 1 and 64 labeled parts"));
            }
            let mut sum = LabeledSum::new();
            for (i, arg) in a.args.iter().enumerate() {
                let Arg::Part { label, value } = arg else {
                    return Err(a.err(format!("argument {i} must be {{\"label\", \"value\"}}")));
                };
                match a.value(value)? {
                    Some(Value::Int(v)) => sum = sum.part(label.clone(), v),
                    _ => return Err(a.err(format!("part {label:?} must evaluate to an integer"))),
                }
            }
            int(moduli::scenario_moduli(&sum))
        }
        "mukai_record" => {
            a.arity(1)?;
            let r = mukai::mukai_record(a.int(0)?)?;
            Ok(Value::Tuple(vec![r.dim_g, r.dim_u, r.dim_m, r.k_g, r.dim_m_prime]))
        }
        "grassmann_dim" => {
            a.arity(2)?;
            int(mukai::grassmann_dim(a.int(0)?, a.int(1)?)?)
        }
        "moduli_map_check" => {
            a.arity(1)?;
            let c = mukai::moduli_map_check(a.int(0)?)?;
            Ok(Value::Tuple(vec![c.source_dim, c.target_dim, c.defect]))
        }
        "ic_family_check" => {
            a.arity(1)?;
            let c = mukai::ic_family_check(a.int(0)?)?;
            Ok(tuple2((c.ic_dim, c.kc_dim)))
        }
        "cork_general" => {
            a.arity(1)?;
            int(mukai::cork_general(a.int(0)?)?)
        }
        "ribbon_space_dim" => {
            a.arity(1)?;
            int(mukai::ribbon_space_dim(a.int(0)?)?)
        }
        "add" | "mul" => {
            let vs = a.all_ints()?;
            if vs.is_empty() {
                return Err(a.err("needs at least one argument"));
            }
            let folded = if recipe.op == "add" {
                vs.iter().try_fold(0i64, |acc, &v| acc.checked_add(v))
            } else {
                vs.iter().try_fold(1i64, |acc, &v| acc.checked_mul(v))
            };
            folded.map(Value::Int).ok_or(Error::Overflow("recipe arithmetic"))
        }
        "sub" => {
            a.arity(2)?;
            a.int(0)?.checked_sub(a.int(1)?).map(Value::Int).ok_or(Error::Overflow("recipe arithmetic"))
        }
        "div_floor" => {
            a.arity(2)?;
            let (x, y) = (a.int(0)?, a.int(1)?);
            if y == 0 {
                return Err(a.err("division by zero"));
            }
            x.checked_div(y)
                .map(|q| if x % y != 0 && (x < 0) != (y < 0) { q - 1 } else { q })
                .map(Value::Int)
                .ok_or(Error::Overflow("recipe arithmetic"))
        }
        "gt" => {
            a.arity(2)?;
            Ok(Value::Bool(a.int(0)? > a.int(1)?))
        }
        "le" => {
            a.arity(2)?;
            Ok(Value::Bool(a.int(0)? <= a.int(1)?))
        }
        "tuple" => {
            if a.args.len() > MAX_LIST {
                return Err(a.err("too many entries"));
            }
            a.all_ints().map(Value::Tuple)
        }
        "nth" => {
            a.arity(2)?;
            let items = a.ints(0)?;
            let i = a.non_negative(1)? as usize;
            items.get(i).copied().map(Value::Int).ok_or_else(|| a.err(format!("index {i} out of range")))
        }
        other => Err(Error::Recipe { op: other.to_string(), message: "unknown operation".into() }),
    }
}
