use crate::error::{Error, Result};

/// A finite quasigroup on `0..order` given by its operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasigroup {
    order: usize,
    table: Vec<usize>,
}

impl Quasigroup {
    /// `table[x * order + y]` is `x . y`; rejects tables that are not Latin squares.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != order * order {
            return Err(Error::invalid("quasigroup", format!("table has {} entries, expected {}", table.len(), order * order)));
        }
        let q = Quasigroup { order, table };
        if !q.is_latin() {
            return Err(Error::invalid("quasigroup", "table is not a Latin square"));
        }
        Ok(q)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn is_latin(&self) -> bool {
        let n = self.order;
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for x in 0..n {
            row.fill(false);
            col.fill(false);
            for y in 0..n {
                let (a, b) = (self.table[x * n + y], self.table[y * n + x]);
                if a >= n || b >= n || row[a] || col[b] {
                    return false;
                }
                row[a] = true;
                col[b] = true;
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.op(x, y) == self.op(y, x)))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.op(x, x) == x)
    }
}

/// `x . y = (x + y) / 2` in `Z_n`, i.e. `(x + y)(n + 1)/2 mod n`. Requires `n` odd.
pub fn cyclic_idempotent_quasigroup(n: usize) -> Result<Quasigroup> {
    if n.is_multiple_of(2) {
        return Err(Error::precondition(format!("commutative idempotent quasigroups need odd order, got {n}")));
    }
    let half = n.div_ceil(2);
    let table = (0..n * n).map(|i| ((i / n + i % n) * half) % n).collect();
    Quasigroup::from_table(n, table)
}
