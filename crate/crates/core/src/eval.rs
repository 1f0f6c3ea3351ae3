//! Compiled formulas and the valuation-search engine.
//!
//! A [`Program`] is the hash-consed DAG of the distinct subformulas of one or
//! more formulas, in an order where every node follows its children. It is
//! evaluated either on one valuation at a time (set semantics, with a
//! pluggable `□` operator) or 64 valuations at a time, bit-sliced across the
//! lanes of a `u64`, which is how validity over all valuations is decided.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::formula::{Formula, Var};
use crate::worlds::WorldSet;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Var(usize),
    Top,
    Not(usize),
    And(usize, usize),
    Box(usize),
}

#[derive(Clone, Debug)]
pub struct Program {
    ops: Vec<Op>,
    vars: Vec<Var>,
    roots: Vec<usize>,
}

impl Program {
    /// Compiles several formulas into one shared DAG. Variables are numbered
    /// in sorted name order.
    pub fn compile(formulas: &[&Formula]) -> Program {
        let mut vars: Vec<Var> = formulas
            .iter()
            .flat_map(|f| f.vars())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        vars.dedup();
        let var_index: HashMap<Var, usize> = vars
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut builder = Builder {
            ops: Vec::new(),
            seen: HashMap::new(),
            var_index,
        };
        let roots = formulas.iter().map(|f| builder.node(f)).collect();
        Program {
            ops: builder.ops,
            vars,
            roots,
        }
    }

    pub fn single(f: &Formula) -> Program {
        Self::compile(&[f])
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn root(&self) -> usize {
        self.roots[0]
    }

    /// Number of distinct `□`-nodes.
    pub fn box_count(&self) -> usize {
        self.ops.iter().filter(|o| matches!(o, Op::Box(_))).count()
    }

    /// Evaluates every node on one valuation (`valuation[i]` interprets
    /// `vars()[i]`). `universe` is the interpretation of `⊤`.
    pub fn eval_sets(
        &self,
        universe: WorldSet,
        valuation: &[WorldSet],
        mut box_op: impl FnMut(WorldSet) -> WorldSet,
    ) -> Vec<WorldSet> {
        let mut val = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let v = match *op {
                Op::Var(i) => valuation[i],
                Op::Top => universe,
                Op::Not(a) => universe.difference(val[a]),
                Op::And(a, b) => val[a].intersection(val[b]),
                Op::Box(a) => box_op(val[a]),
            };
            val.push(v);
        }
        val
    }

    /// Searches all valuations of the program's variables over `succ.len()`
    /// worlds, reading `succ[x]` as the set `□` quantifies over at `x`.
    /// Returns the first valuation (in index order) making the root formula
    /// false somewhere, or `None` if it is true everywhere under all of them.
    pub fn find_falsifying_valuation(
        &self,
        succ: &[WorldSet],
        cap: u128,
    ) -> Result<Option<Vec<WorldSet>>> {
        let worlds = succ.len();
        let bits = worlds * self.vars.len();
        let required = valuation_count(worlds, self.vars.len());
        if required > cap {
            return Err(Error::BudgetExceeded {
                what: "valuation enumeration",
                required,
                cap,
            });
        }
        let (batches, lanes) = if bits <= 6 {
            (
                1u64,
                if bits == 6 {
                    u64::MAX
                } else {
                    (1u64 << (1u64 << bits)) - 1
                },
            )
        } else {
            (1u64 << (bits - 6), u64::MAX)
        };
        let succ_lists: Vec<Vec<usize>> = succ.iter().map(|s| s.to_vec()).collect();
        let root = self.root();
        let mut val = vec![0u64; self.ops.len() * worlds];
        for batch in 0..batches {
            for (k, op) in self.ops.iter().enumerate() {
                let base = k * worlds;
                for x in 0..worlds {
                    let v = match *op {
                        Op::Var(i) => {
                            let b = i * worlds + x;
                            if b < 6 {
                                LANE_PATTERNS[b]
                            } else if batch >> (b - 6) & 1 == 1 {
                                u64::MAX
                            } else {
                                0
                            }
                        }
                        Op::Top => u64::MAX,
                        Op::Not(a) => !val[a * worlds + x],
                        Op::And(a, b) => val[a * worlds + x] & val[b * worlds + x],
                        Op::Box(a) => {
                            let mut acc = u64::MAX;
                            for &y in &succ_lists[x] {
                                acc &= val[a * worlds + y];
                            }
                            acc
                        }
                    };
                    val[base + x] = v;
                }
            }
            let mut failing = 0u64;
            for x in 0..worlds {
                failing |= !val[root * worlds + x] & lanes;
            }
            if failing != 0 {
                let lane = failing.trailing_zeros() as u64;
                let index = batch << 6 | lane;
                return Ok(Some(self.decode_valuation(index, worlds)));
            }
        }
        Ok(None)
    }

    fn decode_valuation(&self, index: u64, worlds: usize) -> Vec<WorldSet> {
        (0..self.vars.len())
            .map(|i| {
                (0..worlds)
                    .filter(|&x| index >> (i * worlds + x) & 1 == 1)
                    .collect()
            })
            .collect()
    }
}

/// `2^(worlds · vars)`, saturating.
pub fn valuation_count(worlds: usize, vars: usize) -> u128 {
    let bits = worlds.saturating_mul(vars);
    if bits >= 128 {
        u128::MAX
    } else {
        1u128 << bits
    }
}

// Lane `l` of pattern `b` is bit `b` of `l`.
const LANE_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

struct Builder {
    ops: Vec<Op>,
    seen: HashMap<Formula, usize>,
    var_index: HashMap<Var, usize>,
}

impl Builder {
    fn node(&mut self, f: &Formula) -> usize {
        if let Some(&i) = self.seen.get(f) {
            return i;
        }
        let op = match f {
            Formula::Var(v) => Op::Var(self.var_index[v]),
            Formula::Top => Op::Top,
            Formula::Not(g) => Op::Not(self.node(g)),
            Formula::Box(g) => Op::Box(self.node(g)),
            Formula::And(a, b) => {
                let a = self.node(a);
                Op::And(a, self.node(b))
            }
        };
        self.ops.push(op);
        let i = self.ops.len() - 1;
        self.seen.insert(f.clone(), i);
        i
    }
}
