//! Hyperfields on a finite carrier given by explicit operation tables.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Multiplication and hyperaddition tables over symbols `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    pub name: String,
    pub symbols: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub mul: Vec<Vec<usize>>,
    pub add: Vec<Vec<BTreeSet<usize>>>,
    /// First `y` with `zero ∈ x ⊞ y`. Unique for a genuine hyperfield.
    pub neg: Vec<usize>,
    pub inv: Vec<Option<usize>>,
}

impl FiniteTable {
    /// Derives negation and inversion from the tables.
    pub fn from_tables(
        name: &str,
        symbols: Vec<String>,
        zero: usize,
        one: usize,
        mul: Vec<Vec<usize>>,
        add: Vec<Vec<BTreeSet<usize>>>,
    ) -> Result<Self> {
        let n = symbols.len();
        if mul.len() != n || add.len() != n || mul.iter().any(|r| r.len() != n) || add.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table dimensions do not match the symbol count".into()));
        }
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| add[x][y].contains(&zero))
                    .ok_or_else(|| Error::InvalidTable(format!("{} has no hyperinverse", symbols[x])))
            })
            .collect::<Result<Vec<_>>>()?;
        let inv = (0..n)
            .map(|x| if x == zero { None } else { (0..n).find(|&y| mul[x][y] == one) })
            .collect();
        Ok(FiniteTable { name: name.to_string(), symbols, zero, one, mul, add, neg, inv })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Krasner hyperfield on `{0, 1}`.
    pub fn krasner() -> Self {
        weak(
            "K",
            vec!["1".into()],
            vec![vec![0]],
            0,
        )
        .expect("valid table")
    }

    /// Hyperfield of signs on `{0, 1, -1}`.
    pub fn signs() -> Self {
        let (symbols, mul) = sign_mul();
        let s = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        let all = s(&[0, 1, 2]);
        let add = vec![
            vec![s(&[0]), s(&[1]), s(&[2])],
            vec![s(&[1]), s(&[1]), all.clone()],
            vec![s(&[2]), all, s(&[2])],
        ];
        FiniteTable::from_tables("S", symbols, 0, 1, mul, add).expect("valid table")
    }

    /// Weak hyperfield of signs, `W({1,-1}, -1)`.
    pub fn weak_signs() -> Self {
        let mut t = weak("W", vec!["1".into(), "-1".into()], vec![vec![0, 1], vec![1, 0]], 1)
            .expect("valid table");
        t.name = "W".into();
        t
    }

    /// `W(Z/n, g^k)` on the cyclic group with symbols `g0..g{n-1}`; requires `2k ≡ 0 (mod n)`.
    pub fn weak_cyclic(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidTable(format!("g{k} is not an element of Z/{n}")));
        }
        let group: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        weak(&format!("W(Z{n},{k})"), group, table, k)
    }

    /// `W(G,e)` from a Cayley table text: first line `n`, then `n` rows of
    /// `n` whitespace-separated symbols, then the symbol `e`. Rows and
    /// columns are indexed in the order the symbols appear in the first row.
    pub fn weak_from_cayley(name: &str, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("missing size line".into()))?
            .parse()
            .map_err(|_| Error::InvalidTable("size is not a number".into()))?;
        if n == 0 {
            return Err(Error::InvalidTable("group must be nonempty".into()));
        }
        let rows: Vec<Vec<String>> = (0..n)
            .map(|_| {
                lines
                    .next()
                    .map(|l| l.split_whitespace().map(String::from).collect())
                    .ok_or_else(|| Error::InvalidTable("missing table row".into()))
            })
            .collect::<Result<_>>()?;
        let e = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("missing self-inverse element".into()))?
            .to_string();
        if lines.next().is_some() {
            return Err(Error::InvalidTable("trailing content after the element e".into()));
        }
        let symbols = rows[0].clone();
        let index: HashMap<&str, usize> = symbols.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if index.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("first row must list n distinct symbols".into()));
        }
        if index.contains_key("0") {
            return Err(Error::InvalidTable("`0` is reserved for the zero element".into()));
        }
        let table = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| index.get(s.as_str()).copied().ok_or_else(|| Error::InvalidTable(format!("unknown symbol {s}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let e = *index.get(e.as_str()).ok_or_else(|| Error::InvalidTable(format!("unknown symbol {e}")))?;
        weak(name, symbols, table, e)
    }
}

fn sign_mul() -> (Vec<String>, Vec<Vec<usize>>) {
    // indices: 0 -> 0, 1 -> 1, 2 -> -1
    let symbols = vec!["0".to_string(), "1".to_string(), "-1".to_string()];
    let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
    (symbols, mul)
}

/// Builds `W(G,e)` from a group table on `G` (indices `0..n`, identity at
/// index 0 or wherever the table says). The zero is inserted at index 0.
fn weak(name: &str, group: Vec<String>, table: Vec<Vec<usize>>, e: usize) -> Result<FiniteTable> {
    let n = group.len();
    let identity = (0..n)
        .find(|&i| (0..n).all(|j| table[i][j] == j && table[j][i] == j))
        .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            if table[a][b] != table[b][a] {
                return Err(Error::InvalidTable("group is not abelian".into()));
            }
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidTable("group operation is not associative".into()));
                }
            }
        }
        if !(0..n).any(|b| table[a][b] == identity) {
            return Err(Error::InvalidTable(format!("{} has no inverse", group[a])));
        }
    }
    if table[e][e] != identity {
        return Err(Error::InvalidTable("e is not self-inverse".into()));
    }
    // carrier index k+1 is group element k
    let mut symbols = vec!["0".to_string()];
    symbols.extend(group.iter().cloned());
    let m = n + 1;
    let mut mul = vec![vec![0; m]; m];
    for a in 0..n {
        for b in 0..n {
            mul[a + 1][b + 1] = table[a][b] + 1;
        }
    }
    let whole_group: BTreeSet<usize> = (1..m).collect();
    let everything: BTreeSet<usize> = (0..m).collect();
    let mut add = vec![vec![BTreeSet::new(); m]; m];
    for (x, row) in add.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = if x == 0 {
                [y].into_iter().collect()
            } else if y == 0 {
                [x].into_iter().collect()
            } else if y == mul[e + 1][x] {
                everything.clone()
            } else {
                whole_group.clone()
            };
        }
    }
    FiniteTable::from_tables(name, symbols, 0, identity + 1, mul, add)
}
