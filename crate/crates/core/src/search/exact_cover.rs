//! Algorithm X over dancing links.
//!
//! Items are `0..n_items`, all primary; an option is a set of items. A
//! solution is a set of options covering every item exactly once.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Limits for a backtracking search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
    /// 0 keeps options in the order given; any other value shuffles them deterministically.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, max_time: Duration::from_secs(60), seed: 0 }
    }
}

impl SearchBudget {
    pub fn is_valid(&self) -> bool {
        self.max_nodes > 0 && !self.max_time.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Indices into the option list, in the order they were chosen.
    Found(Vec<usize>),
    /// The whole tree was searched without a solution.
    Exhausted,
    BudgetExceeded { nodes: u64 },
}

#[derive(Debug, Clone, Copy, Default)]
struct Node {
    left: usize,
    right: usize,
    up: usize,
    down: usize,
    /// Column header index for option nodes; unused on headers.
    col: usize,
    /// Option index for option nodes.
    row: usize,
}

struct Links {
    nodes: Vec<Node>,
    size: Vec<usize>,
}

const ROOT: usize = 0;

impl Links {
    fn build(n_items: usize, options: &[&[usize]]) -> Self {
        let mut nodes = Vec::with_capacity(1 + n_items + options.iter().map(|o| o.len()).sum::<usize>());
        for i in 0..=n_items {
            nodes.push(Node { left: if i == 0 { n_items } else { i - 1 }, right: (i + 1) % (n_items + 1), up: i, down: i, col: i, row: usize::MAX });
        }
        let mut size = vec![0; n_items + 1];
        for (row, items) in options.iter().enumerate() {
            let first = nodes.len();
            for (j, &item) in items.iter().enumerate() {
                let col = item + 1;
                let idx = nodes.len();
                let up = nodes[col].up;
                let left = if j == 0 { idx } else { idx - 1 };
                nodes.push(Node { left, right: first, up, down: col, col, row });
                nodes[up].down = idx;
                nodes[col].up = idx;
                if j > 0 {
                    nodes[idx - 1].right = idx;
                    nodes[first].left = idx;
                }
                size[col] += 1;
            }
        }
        Links { nodes, size }
    }

    fn cover(&mut self, col: usize) {
        let Node { left, right, .. } = self.nodes[col];
        self.nodes[left].right = right;
        self.nodes[right].left = left;
        let mut i = self.nodes[col].down;
        while i != col {
            let mut j = self.nodes[i].right;
            while j != i {
                let Node { up, down, col: c, .. } = self.nodes[j];
                self.nodes[up].down = down;
                self.nodes[down].up = up;
                self.size[c] -= 1;
                j = self.nodes[j].right;
            }
            i = self.nodes[i].down;
        }
    }

    fn uncover(&mut self, col: usize) {
        let mut i = self.nodes[col].up;
        while i != col {
            let mut j = self.nodes[i].left;
            while j != i {
                let Node { up, down, col: c, .. } = self.nodes[j];
                self.nodes[up].down = j;
                self.nodes[down].up = j;
                self.size[c] += 1;
                j = self.nodes[j].left;
            }
            i = self.nodes[i].up;
        }
        let Node { left, right, .. } = self.nodes[col];
        self.nodes[left].right = col;
        self.nodes[right].left = col;
    }

    /// Uncovered column with fewest options; ties go to the lowest item.
    fn choose(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut c = self.nodes[ROOT].right;
        while c != ROOT {
            if best.is_none_or(|b| self.size[c] < self.size[b]) {
                best = Some(c);
                if self.size[c] == 0 {
                    break;
                }
            }
            c = self.nodes[c].right;
        }
        best
    }
}

struct Solver<'a> {
    links: Links,
    budget: &'a SearchBudget,
    start: Instant,
    nodes: u64,
    partial: Vec<usize>,
}

enum Step {
    Solved,
    Dead,
    OutOfBudget,
}

impl Solver<'_> {
    fn search(&mut self) -> Step {
        let Some(col) = self.links.choose() else { return Step::Solved };
        if self.links.size[col] == 0 {
            return Step::Dead;
        }
        self.links.cover(col);
        let mut r = self.links.nodes[col].down;
        while r != col {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes
                || (self.nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.max_time)
            {
                return Step::OutOfBudget;
            }
            self.partial.push(self.links.nodes[r].row);
            let mut j = self.links.nodes[r].right;
            while j != r {
                self.links.cover(self.links.nodes[j].col);
                j = self.links.nodes[j].right;
            }
            match self.search() {
                Step::Dead => {}
                done => return done,
            }
            let mut j = self.links.nodes[r].left;
            while j != r {
                self.links.uncover(self.links.nodes[j].col);
                j = self.links.nodes[j].left;
            }
            self.partial.pop();
            r = self.links.nodes[r].down;
        }
        self.links.uncover(col);
        Step::Dead
    }
}

/// Finds the first exact cover in the (possibly seed-shuffled) option order.
pub fn solve_first(n_items: usize, options: &[Vec<usize>], budget: &SearchBudget) -> SearchOutcome {
    let mut order: Vec<usize> = (0..options.len()).collect();
    if budget.seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(budget.seed));
    }
    let ordered: Vec<&[usize]> = order.iter().map(|&i| options[i].as_slice()).collect();
    let mut solver = Solver { links: Links::build(n_items, &ordered), budget, start: Instant::now(), nodes: 0, partial: Vec::new() };
    match solver.search() {
        Step::Solved => SearchOutcome::Found(solver.partial.iter().map(|&i| order[i]).collect()),
        Step::Dead => SearchOutcome::Exhausted,
        Step::OutOfBudget => SearchOutcome::BudgetExceeded { nodes: solver.nodes },
    }
}
