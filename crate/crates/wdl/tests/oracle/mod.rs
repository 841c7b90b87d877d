//! Brute-force reference implementations, written against the definitions
//! only. They read the order relation and the Δ table of an instance and
//! recompute everything else from scratch with plain bitmasks.

use wdl_core::Dicomplementation;

pub type Set = u64;

pub fn has(s: Set, x: usize) -> bool {
    s >> x & 1 == 1
}

pub fn members(s: Set, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&x| has(s, x))
}

pub struct Oracle {
    pub n: usize,
    pub names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    pub delta: Vec<usize>,
    pub top: usize,
    pub bottom: usize,
}

impl Oracle {
    pub fn new(d: &Dicomplementation) -> Self {
        let l = d.lattice();
        let n = l.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| l.leq(a, b)).collect()).collect();
        let extreme = |cands: Vec<usize>, below: bool| -> usize {
            *cands
                .iter()
                .find(|&&c| cands.iter().all(|&d| if below { leq[d][c] } else { leq[c][d] }))
                .expect("lattice bound exists")
        };
        let meet = (0..n)
            .map(|a| (0..n).map(|b| extreme((0..n).filter(|&c| leq[c][a] && leq[c][b]).collect(), true)).collect())
            .collect();
        let join = (0..n)
            .map(|a| (0..n).map(|b| extreme((0..n).filter(|&c| leq[a][c] && leq[b][c]).collect(), false)).collect())
            .collect();
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t])).unwrap();
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x])).unwrap();
        Oracle {
            n,
            names: l.names().to_vec(),
            leq,
            meet,
            join,
            delta: d.delta_table().expect("weak complementation present").to_vec(),
            top,
            bottom,
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn d(&self, x: usize) -> usize {
        self.delta[x]
    }

    pub fn sqcap_bar(&self, x: usize, y: usize) -> usize {
        self.d(self.join(self.d(x), self.d(y)))
    }

    pub fn all(&self) -> Set {
        (1u64 << self.n) - 1
    }

    pub fn set(&self, names: &[&str]) -> Set {
        names.iter().map(|m| 1u64 << self.names.iter().position(|k| k == m).expect("known name")).sum()
    }

    pub fn show(&self, s: Set) -> Vec<String> {
        members(s, self.n).map(|x| self.names[x].clone()).collect()
    }

    pub fn is_filter(&self, s: Set) -> bool {
        s != 0
            && members(s, self.n).all(|x| {
                (0..self.n).all(|y| !self.leq(x, y) || has(s, y)) && members(s, self.n).all(|y| has(s, self.meet(x, y)))
            })
    }

    pub fn filters(&self) -> Vec<Set> {
        (1..=self.all()).filter(|&s| self.is_filter(s)).collect()
    }

    pub fn principal(&self, a: usize) -> Set {
        (0..self.n).filter(|&x| self.leq(a, x)).map(|x| 1u64 << x).sum()
    }

    /// Smallest filter containing `s`.
    pub fn generated(&self, s: Set) -> Set {
        self.filters().into_iter().filter(|&f| f & s == s).fold(self.all(), |a, f| a & f)
    }

    pub fn star(&self, s: Set) -> Set {
        (0..self.n).filter(|&a| members(s, self.n).all(|x| self.leq(self.d(x), a))).map(|a| 1u64 << a).sum()
    }

    pub fn dual_skeleton(&self) -> Set {
        (0..self.n).filter(|&x| self.d(self.d(x)) == x).map(|x| 1u64 << x).sum()
    }

    pub fn is_s_filter(&self, s: Set) -> bool {
        self.is_filter(s) && members(s, self.n).all(|x| members(s, self.n).all(|y| has(s, self.sqcap_bar(x, y))))
    }

    pub fn s_filters(&self) -> Vec<Set> {
        self.filters().into_iter().filter(|&f| self.is_s_filter(f)).collect()
    }

    /// Filters of the dual skeleton under its own order and `⊓̄`.
    pub fn skeleton_filters(&self) -> Vec<Set> {
        let sk = self.dual_skeleton();
        (1..=self.all())
            .filter(|&g| g & !sk == 0)
            .filter(|&g| {
                members(g, self.n).all(|x| {
                    members(sk, self.n).all(|y| !self.leq(x, y) || has(g, y))
                        && members(g, self.n).all(|y| has(g, self.sqcap_bar(x, y)))
                })
            })
            .collect()
    }

    pub fn f_of(&self, g: Set) -> Set {
        (0..self.n).filter(|&x| has(g, self.d(self.d(x)))).map(|x| 1u64 << x).sum()
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))))
        })
    }

    /// Congruences of the reduct `(L; ∧, ∨, Δ)` as class-label vectors,
    /// found by running through every partition.
    pub fn congruences(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut labels = vec![0usize; self.n];
        self.partitions(1, 0, &mut labels, &mut out);
        out
    }

    fn partitions(&self, i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == self.n {
            if self.compatible(labels) {
                out.push(labels.clone());
            }
            return;
        }
        for k in 0..=max + 1 {
            labels[i] = k;
            self.partitions(i + 1, max.max(k), labels, out);
        }
    }

    pub fn compatible(&self, c: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).filter(|&y| c[x] == c[y]).all(|y| {
                c[self.d(x)] == c[self.d(y)]
                    && (0..n)
                        .all(|z| c[self.meet(x, z)] == c[self.meet(y, z)] && c[self.join(x, z)] == c[self.join(y, z)])
            })
        })
    }

    /// `{(x, y) | ∃u∈F, x ∨ u^Δ = y ∨ u^Δ}` as a relation matrix.
    pub fn theta(&self, f: Set) -> Vec<Vec<bool>> {
        let n = self.n;
        (0..n)
            .map(|x| {
                (0..n).map(|y| members(f, n).any(|u| self.join(x, self.d(u)) == self.join(y, self.d(u)))).collect()
            })
            .collect()
    }
}

pub fn relation_of(c: &[usize]) -> Vec<Vec<bool>> {
    c.iter().map(|a| c.iter().map(|b| a == b).collect()).collect()
}

pub fn compose(r: &[Vec<bool>], s: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = r.len();
    (0..n).map(|x| (0..n).map(|z| (0..n).any(|y| r[x][y] && s[y][z])).collect()).collect()
}

pub fn contained(r: &[Vec<bool>], s: &[Vec<bool>]) -> bool {
    r.iter().zip(s).all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y))
}

/// Least congruence containing the relation, taken from the full list.
pub fn least_above(con: &[Vec<usize>], r: &[Vec<bool>]) -> Option<Vec<usize>> {
    let above: Vec<&Vec<usize>> = con.iter().filter(|c| contained(r, &relation_of(c))).collect();
    above.iter().find(|c| above.iter().all(|d| contained(&relation_of(c), &relation_of(d)))).map(|c| (*c).clone())
}

pub fn cokernel(c: &[usize], top: usize) -> Set {
    c.iter().enumerate().filter(|&(_, &k)| k == c[top]).map(|(x, _)| 1u64 << x).sum()
}

pub fn is_diagonal(c: &[usize]) -> bool {
    c.iter().enumerate().all(|(i, &k)| i == k)
}
