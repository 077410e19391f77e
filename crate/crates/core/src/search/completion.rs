//! Completing a pentagonal geometry from a prescribed deficiency graph.

use std::collections::BTreeSet;

use crate::analysis::verify_pentagonal;
use crate::design::{parameters, Design, Line, PairCoverage};
use crate::error::{Error, Result};
use crate::graph::{build_deficiency, classify, ComponentTag, Graph};

use super::exact_cover::{solve_first, SearchBudget, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completion {
    Found(Design),
    /// The search space was exhausted: no geometry has this deficiency graph.
    Unsatisfiable,
}

/// Searches for a PENT(k,r) whose deficiency graph is exactly `g`.
///
/// The neighbourhoods of `g` are forced lines. The remaining non-adjacent pairs
/// are covered exactly once by k-cliques of the graph of uncovered pairs; exact
/// pair cover already gives every point replication `r`.
///
/// Returns `Error::BudgetExhausted` when the budget runs out before a decision.
pub fn complete_from_deficiency(g: &Graph, k: usize, r: usize, budget: &SearchBudget) -> Result<Completion> {
    check_input(g, k, r, budget)?;
    let v = g.n();

    let mandatory: BTreeSet<Line> = (0..v).map(|x| g.neighbors(x).to_vec()).collect();
    let mandatory: Vec<Line> = mandatory.into_iter().collect();
    let mut cov = PairCoverage::from_lines(v, &mandatory);
    if cov.overcovered().next().is_some() || mandatory.iter().any(|l| contains_edge(g, l)) {
        return Ok(Completion::Unsatisfiable);
    }

    // free[x][y]: non-adjacent and not yet on a line
    let mut item_of = vec![usize::MAX; v * v];
    let mut n_items = 0;
    for x in 0..v {
        for y in x + 1..v {
            if !g.has_edge(x, y) && !cov.collinear(x, y) {
                item_of[x * v + y] = n_items;
                item_of[y * v + x] = n_items;
                n_items += 1;
            }
        }
    }
    let free = |x: usize, y: usize| item_of[x * v + y] != usize::MAX;

    let mut candidates: Vec<Line> = Vec::new();
    let mut current = Vec::with_capacity(k);
    for x in 0..v {
        current.push(x);
        extend_clique(v, k, &free, &mut current, &mut candidates);
        current.pop();
    }
    let options: Vec<Vec<usize>> = candidates
        .iter()
        .map(|line| {
            let mut items = Vec::with_capacity(k * (k - 1) / 2);
            for (i, &x) in line.iter().enumerate() {
                for &y in &line[i + 1..] {
                    items.push(item_of[x * v + y]);
                }
            }
            items
        })
        .collect();

    match solve_first(n_items, &options, budget) {
        SearchOutcome::Found(chosen) => {
            let mut lines = mandatory;
            for i in chosen {
                cov.add_line(&candidates[i]);
                lines.push(candidates[i].clone());
            }
            let d = Design::new(v, k, lines)?.with_claimed_r(Some(r));
            if build_deficiency(&d) != *g {
                return Err(Error::invalid("completion", "deficiency graph of result differs from input"));
            }
            let report = verify_pentagonal(&d);
            if !report.pentagonal {
                return Err(Error::invalid("completion", "result is not pentagonal"));
            }
            Ok(Completion::Found(d))
        }
        SearchOutcome::Exhausted => Ok(Completion::Unsatisfiable),
        SearchOutcome::BudgetExceeded { nodes } => Err(Error::BudgetExhausted { nodes }),
    }
}

fn check_input(g: &Graph, k: usize, r: usize, budget: &SearchBudget) -> Result<()> {
    if k < 2 || r < 1 {
        return Err(Error::precondition(format!("need k >= 2 and r >= 1, got k = {k}, r = {r}")));
    }
    if !budget.is_valid() {
        return Err(Error::precondition("search budget limits must be positive"));
    }
    let v = parameters(k, r).v;
    if g.n() != v {
        return Err(Error::precondition(format!("PENT({k},{r}) has {v} points, graph has {}", g.n())));
    }
    if g.regular_degree() != Some(k) {
        return Err(Error::precondition(format!("deficiency graph must be {k}-regular")));
    }
    if let Some(c) = classify(g, k).components.iter().find(|c| matches!(c.tag, ComponentTag::Other { .. })) {
        return Err(Error::precondition(format!(
            "component containing vertex {} is neither K_{{{k},{k}}} nor of girth at least 5",
            c.vertices[0]
        )));
    }
    Ok(())
}

fn contains_edge(g: &Graph, line: &[usize]) -> bool {
    line.iter().enumerate().any(|(i, &x)| line[i + 1..].iter().any(|&y| g.has_edge(x, y)))
}

/// Appends every k-clique of `free` that extends `current` by larger vertices.
fn extend_clique(v: usize, k: usize, free: &impl Fn(usize, usize) -> bool, current: &mut Vec<usize>, out: &mut Vec<Line>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let last = *current.last().expect("clique is seeded");
    for y in last + 1..v {
        if current.iter().all(|&x| free(x, y)) {
            current.push(y);
            extend_clique(v, k, free, current, out);
            current.pop();
        }
    }
}
