//! One function per subcommand. Each returns the text to print.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_traits::Zero;
use posetprob::blocking::{balanced_pair_scan, blocking_ideals, decompose, e_blocking, pair_table, ratio, split_check};
use posetprob::corpus::{partitions, posets_up_to_isomorphism, subpartitions};
use posetprob::ideal_lattice::{count_linear_extensions, e_with_constraint, linear_extensions};
use posetprob::tableaux::{
    blocking_partitions, cell_poset, decorated_tableau, e_partition, f_hook, f_skew_aitken, f_skew_naruse,
    probability_partition, Cell, SkewShape,
};
use posetprob::two_rows::{
    blocking_two_row, e_two_row, limit_probability, probability_matrix, probability_two_row, TwoRowCase,
};
use posetprob::{Error, ExactRational, Limits, Poset};
use serde_json::{json, Value};

use crate::input::{Element, Input};
use crate::render::{self, Format, Renderer};
use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// The most specialised engine that applies.
    #[default]
    Auto,
    /// Blocking expansion on an arbitrary poset.
    Generic,
    /// Hook length and Aitken determinant terms.
    Partition,
    /// Closed forms for two-row shapes.
    TwoRow,
    /// Brute-force enumeration of linear extensions.
    Oracle,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Generic => "generic",
            Engine::Partition => "partition",
            Engine::TwoRow => "two-row",
            Engine::Oracle => "oracle",
        }
    }
}

fn not_applicable(engine: Engine, reason: impl Into<String>) -> CliError {
    CliError::EngineNotApplicable {
        engine: engine.name(),
        reason: reason.into(),
    }
}

fn element_name(input: &Input, e: Element) -> String {
    match (input, e) {
        (Input::Poset(p), Element::Index(i)) => p.label(i).to_string(),
        (_, Element::Cell(c)) => c.to_string(),
        (_, Element::Index(i)) => i.to_string(),
    }
}

fn cells(a: Element, b: Element) -> (Cell, Cell) {
    match (a, b) {
        (Element::Cell(a), Element::Cell(b)) => (a, b),
        _ => unreachable!("partition inputs resolve to cells"),
    }
}

fn oracle_probability(p: &Poset, a: usize, b: usize, limits: &Limits) -> Result<ExactRational, CliError> {
    let ab = e_with_constraint(p, a, b, limits)?;
    let ba = e_with_constraint(p, b, a, limits)?;
    Ok(ratio(&ab, &(&ab + ba)))
}

fn two_row_case(input: &Input, a: Element, b: Element) -> Result<TwoRowCase, CliError> {
    let Input::Partition(lambda) = input else {
        return Err(not_applicable(Engine::TwoRow, "needs --partition"));
    };
    if lambda.len() != 2 {
        return Err(not_applicable(Engine::TwoRow, format!("{lambda} does not have two rows")));
    }
    let (a, b) = cells(a, b);
    TwoRowCase::new(lambda.row(1), lambda.row(2), a, b).map_err(|e| not_applicable(Engine::TwoRow, e.to_string()))
}

/// Runs `engine` (resolving `auto`) and reports which engine answered.
pub fn probability_value(
    input: &Input,
    a: Element,
    b: Element,
    engine: Engine,
    limits: &Limits,
) -> Result<(Engine, ExactRational), CliError> {
    let engine = match (engine, input) {
        (Engine::Auto, Input::Poset(_)) => Engine::Generic,
        (Engine::Auto, Input::Partition(_)) => {
            if two_row_case(input, a, b).is_ok() {
                Engine::TwoRow
            } else {
                Engine::Partition
            }
        }
        (e, _) => e,
    };
    let value = match engine {
        Engine::Auto => unreachable!("resolved above"),
        Engine::Generic => {
            posetprob::probability(&input.poset(), input.index(a)?, input.index(b)?, limits)?
        }
        Engine::Oracle => oracle_probability(&input.poset(), input.index(a)?, input.index(b)?, limits)?,
        Engine::TwoRow => probability_two_row(&two_row_case(input, a, b)?),
        Engine::Partition => {
            let Input::Partition(lambda) = input else {
                return Err(not_applicable(engine, "needs --partition"));
            };
            let (a, b) = cells(a, b);
            probability_partition(lambda, a, b)?
        }
    };
    Ok((engine, value))
}

pub fn probability(
    input: &Input,
    a: Element,
    b: Element,
    engine: Engine,
    limits: &Limits,
    r: Renderer,
) -> Result<String, CliError> {
    let (used, value) = probability_value(input, a, b, engine, limits)?;
    let (an, bn) = (element_name(input, a), element_name(input, b));
    Ok(match r.format {
        Format::Text => format!("{}\n", r.rational(&value)),
        Format::Csv => render::csv(
            &["alpha", "beta", "engine", "probability"],
            &[vec![an, bn, used.name().into(), r.rational(&value)]],
        ),
        Format::Json => render::json(&json!({
            "alpha": an,
            "beta": bn,
            "engine": used.name(),
            "probability": r.json_rational(&value),
        })),
    })
}

pub fn blocking(input: &Input, a: Element, b: Element, r: Renderer) -> Result<String, CliError> {
    let poset = input.poset();
    let (ia, ib) = (input.index(a)?, input.index(b)?);
    let d = decompose(&poset, ia, ib)?;
    let (picture, ideals): (Option<String>, Vec<String>) = match input {
        Input::Partition(lambda) => {
            let (ca, cb) = cells(a, b);
            let shapes = blocking_partitions(lambda, ca, cb)?;
            (
                Some(decorated_tableau(lambda, ca, cb)?),
                shapes.iter().map(ToString::to_string).collect(),
            )
        }
        Input::Poset(p) => {
            let ideals = blocking_ideals(p, ia, ib)?;
            (None, ideals.iter().map(|t| p.format_set(t.members())).collect())
        }
    };
    let fixed = poset.format_set(d.fixed.members());
    let variable = poset.format_set(&d.variable);
    let complete = poset.format_set(d.complete.members());
    Ok(match r.format {
        Format::Text => {
            let mut out = String::new();
            if let Some(pic) = &picture {
                out.push_str(pic);
                out.push_str("\n\n");
            } else {
                out.push_str(&format!("fixed: {fixed}\nvariable: {variable}\ncomplete: {complete}\n\n"));
            }
            for t in &ideals {
                out.push_str(t);
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = ideals.into_iter().map(|t| vec![t]).collect();
            render::csv(&["blocking_ideal"], &rows)
        }
        Format::Json => render::json(&json!({
            "alpha": element_name(input, a),
            "beta": element_name(input, b),
            "fixed": fixed,
            "variable": variable,
            "complete": complete,
            "tableau": picture,
            "blocking": ideals,
        })),
    })
}

pub fn scan(input: &Input, all_pairs: bool, limits: &Limits, r: Renderer) -> Result<String, CliError> {
    let p = input.poset();
    let best = balanced_pair_scan(&p, limits)?;
    let (x, y) = (p.label(best.pair.0), p.label(best.pair.1));
    let table = if all_pairs { pair_table(&p, limits)? } else { Vec::new() };
    Ok(match r.format {
        Format::Text => {
            let mut out = format!("pair: {x} {y}\nmin-max = {}\n", r.rational(&best.value));
            if all_pairs {
                out.push('\n');
                for ((u, v), q) in &table {
                    out.push_str(&format!("{} {} {}\n", p.label(*u), p.label(*v), r.rational(q)));
                }
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![vec![x.to_string(), y.to_string(), r.rational(&best.value)]];
            if all_pairs {
                rows = table
                    .iter()
                    .map(|((u, v), q)| vec![p.label(*u).to_string(), p.label(*v).to_string(), r.rational(q)])
                    .collect();
            }
            let header = if all_pairs { ["x", "y", "probability"] } else { ["x", "y", "min_max"] };
            render::csv(&header, &rows)
        }
        Format::Json => {
            let pairs: Vec<Value> = table
                .iter()
                .map(|((u, v), q)| json!({"x": p.label(*u), "y": p.label(*v), "probability": r.json_rational(q)}))
                .collect();
            render::json(&json!({
                "pair": [x, y],
                "min_max": r.json_rational(&best.value),
                "pairs": if all_pairs { Value::Array(pairs) } else { Value::Null },
            }))
        }
    })
}

fn matrix_output(rows: &[Vec<ExactRational>], index: impl Fn(usize, usize) -> (String, String), header: [&str; 3], r: Renderer) -> String {
    match r.format {
        Format::Text => rows
            .iter()
            .map(|row| row.iter().map(|x| r.rational(x)).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
        Format::Csv => {
            let long: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .flat_map(|(i, row)| {
                    let index = &index;
                    row.iter().enumerate().map(move |(j, x)| {
                        let (u, v) = index(i, j);
                        vec![u, v, r.rational(x)]
                    })
                })
                .collect();
            render::csv(&header, &long)
        }
        Format::Json => {
            let v: Vec<Vec<Value>> = rows.iter().map(|row| row.iter().map(|x| r.json_rational(x)).collect()).collect();
            render::json(&json!(v))
        }
    }
}

pub fn table_limit_b1(amax: usize, r: Renderer) -> Result<String, CliError> {
    if amax < 2 {
        return Err(Error::OutOfRange(format!("--amax must be at least 2, got {amax}")).into());
    }
    let row = (2..=amax)
        .map(|a| limit_probability(a, 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(matrix_output(&[row], |_, j| ((j + 2).to_string(), "1".into()), ["a", "b", "limit"], r))
}

pub fn table_limit_matrix(amax: usize, r: Renderer) -> Result<String, CliError> {
    if amax < 2 {
        return Err(Error::OutOfRange(format!("--amax must be at least 2, got {amax}")).into());
    }
    let rows = (2..=amax)
        .map(|a| (1..a).map(|b| limit_probability(a, b)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(matrix_output(&rows, |i, j| ((i + 2).to_string(), (j + 1).to_string()), ["a", "b", "limit"], r))
}

/// Lower triangle of the matrix; row `i` is `λ1 = a + i`.
pub fn table_finite_matrix(a: usize, b: usize, size: usize, r: Renderer) -> Result<String, CliError> {
    let full = probability_matrix(a, b, size)?;
    let rows: Vec<Vec<ExactRational>> = full.into_iter().enumerate().map(|(i, row)| row[..=i].to_vec()).collect();
    Ok(matrix_output(
        &rows,
        |i, j| ((a + i).to_string(), (a + j).to_string()),
        ["lambda1", "lambda2", "probability"],
        r,
    ))
}

fn check(ok: bool, count: &mut usize, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if !ok {
        return Err(CliError::VerifyFailed(what()));
    }
    *count += 1;
    Ok(())
}

pub fn verify_small_posets(max_size: usize, limits: &Limits) -> Result<usize, CliError> {
    let mut n_ok = 0;
    for n in 0..=max_size {
        for p in posets_up_to_isomorphism(n)? {
            let total = count_linear_extensions(&p, limits)?;
            let small = n <= limits.max_enumeration_elements;
            if small {
                let listed = linear_extensions(&p).count();
                check(total == listed.into(), &mut n_ok, || format!("e(P) for\n{p}"))?;
            }
            for (a, b) in p.incomparable_pairs() {
                check(split_check(&p, a, b, limits)?, &mut n_ok, || format!("split identity at {a},{b} in\n{p}"))?;
                if small {
                    for (x, y) in [(a, b), (b, a)] {
                        let fast = e_blocking(&p, x, y, limits)?;
                        let slow = e_with_constraint(&p, x, y, limits)?;
                        check(fast == slow, &mut n_ok, || format!("{x} < {y} in\n{p}: {fast} vs {slow}"))?;
                    }
                }
            }
        }
    }
    Ok(n_ok)
}

/// Brute force is only used on skew shapes with at most this many cells.
const BRUTE_FORCE_CELLS: usize = 8;

pub fn verify_partitions(max_weight: usize, limits: &Limits) -> Result<usize, CliError> {
    let mut n_ok = 0;
    for w in 0..=max_weight {
        for lambda in partitions(w) {
            let cp = cell_poset(&lambda);
            let f = f_hook(&lambda);
            let straight = SkewShape::straight(lambda.clone());
            let same = f_skew_aitken(&straight) == f
                && f_skew_naruse(&straight)? == f
                && count_linear_extensions(cp.poset(), limits)? == f;
            check(same, &mut n_ok, || format!("straight shape {lambda}"))?;
            for mu in subpartitions(&lambda) {
                let s = SkewShape::new(lambda.clone(), mu)?;
                let aitken = f_skew_aitken(&s);
                check(aitken == f_skew_naruse(&s)?, &mut n_ok, || format!("skew shape {s}"))?;
                if s.size() <= BRUTE_FORCE_CELLS {
                    let idx: Vec<usize> = s.cells().iter().map(|&c| cp.index_of(c)).collect::<Result<_, _>>()?;
                    let brute = linear_extensions(&cp.poset().induced(&idx)).count();
                    check(aitken == brute.into(), &mut n_ok, || format!("brute force count of {s}"))?;
                }
            }
            let p = cp.poset();
            for (i, j) in p.incomparable_pairs() {
                let (a, b) = (cp.cell(i), cp.cell(j));
                let split = e_partition(&lambda, a, b)? + e_partition(&lambda, b, a)?;
                check(split == f, &mut n_ok, || format!("split identity for {a}, {b} in {lambda}"))?;
                for (x, y, cx, cy) in [(i, j, a, b), (j, i, b, a)] {
                    let generic = posetprob::probability(p, x, y, limits)?;
                    let special = probability_partition(&lambda, cx, cy)?;
                    check(generic == special, &mut n_ok, || format!("{cx} < {cy} in {lambda}"))?;
                }
            }
        }
    }
    Ok(n_ok)
}

pub fn verify_two_row(max: usize, limits: &Limits) -> Result<usize, CliError> {
    let mut n_ok = 0;
    for total in 2..=max {
        for l2 in 1..=total / 2 {
            let l1 = total - l2;
            let lambda = posetprob::Partition::new(vec![l1, l2])?;
            let cp = cell_poset(&lambda);
            for (i, j) in cp.poset().incomparable_pairs() {
                for (x, y) in [(i, j), (j, i)] {
                    let (a, b) = (cp.cell(x), cp.cell(y));
                    let case = TwoRowCase::new(l1, l2, a, b)?;
                    let same = blocking_two_row(&case) == blocking_partitions(&lambda, a, b)?;
                    check(same, &mut n_ok, || format!("blocking set for {a} < {b} in {lambda}"))?;
                    let reference = if total <= limits.max_enumeration_elements {
                        e_with_constraint(cp.poset(), x, y, limits)?
                    } else {
                        e_blocking(cp.poset(), x, y, limits)?
                    };
                    check(e_two_row(&case) == reference, &mut n_ok, || format!("count for {a} < {b} in {lambda}"))?;
                }
            }
        }
    }
    Ok(n_ok)
}

pub fn verify_report(scope: &str, identities: usize, r: Renderer) -> String {
    match r.format {
        Format::Text => format!("OK: {identities} identities\n"),
        Format::Csv => render::csv(&["scope", "identities", "status"], &[vec![scope.into(), identities.to_string(), "ok".into()]]),
        Format::Json => render::json(&json!({"scope": scope, "identities": identities, "status": "ok"})),
    }
}

/// Linear extensions with `a` before `b`, whether or not the pair is comparable.
fn constrained_count(p: &Poset, a: usize, b: usize, limits: &Limits) -> Result<BigUint, CliError> {
    if p.leq(a, b)? {
        return Ok(count_linear_extensions(p, limits)?);
    }
    if p.leq(b, a)? {
        return Ok(Zero::zero());
    }
    Ok(e_blocking(p, a, b, limits)?)
}

pub struct ExtensionQuery {
    pub pair: Option<(Element, Element)>,
    pub count_only: bool,
    pub limit: Option<usize>,
}

pub fn extensions(input: &Input, q: &ExtensionQuery, limits: &Limits, r: Renderer) -> Result<String, CliError> {
    let p = input.poset();
    let pair = match q.pair {
        Some((a, b)) => {
            let (a, b) = (input.index(a)?, input.index(b)?);
            if a == b {
                return Err(Error::SameElement(a).into());
            }
            Some((a, b))
        }
        None => None,
    };
    let count = match pair {
        Some((a, b)) => constrained_count(&p, a, b, limits)?,
        None => count_linear_extensions(&p, limits)?,
    };
    let mut listed: Vec<Vec<String>> = Vec::new();
    if !q.count_only {
        if q.limit.is_none() && p.len() > limits.max_enumeration_elements {
            return Err(Error::SizeLimitExceeded {
                what: "poset size for listing extensions (use --limit or --count)",
                limit: limits.max_enumeration_elements,
            }
            .into());
        }
        let keep = |e: &Vec<usize>| match pair {
            Some((a, b)) => e.iter().position(|&x| x == a) < e.iter().position(|&x| x == b),
            None => true,
        };
        listed = linear_extensions(&p)
            .filter(keep)
            .take(q.limit.unwrap_or(usize::MAX))
            .map(|e| e.iter().map(|&x| p.label(x).to_string()).collect())
            .collect();
    }
    Ok(match r.format {
        Format::Text => {
            if q.count_only {
                format!("{count}\n")
            } else {
                listed.iter().map(|e| e.join(" ") + "\n").collect()
            }
        }
        Format::Csv => {
            if q.count_only {
                render::csv(&["count"], &[vec![count.to_string()]])
            } else {
                let rows: Vec<Vec<String>> = listed.iter().map(|e| vec![e.join(" ")]).collect();
                render::csv(&["extension"], &rows)
            }
        }
        Format::Json => render::json(&json!({
            "count": count.to_string(),
            "extensions": if q.count_only { Value::Null } else { json!(listed) },
        })),
    })
}
