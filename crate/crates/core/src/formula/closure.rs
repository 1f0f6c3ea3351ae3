use indexmap::IndexSet;

use super::Formula;

/// Finite, insertion-ordered set of formulas keyed by structural equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormulaSet {
    items: IndexSet<Formula>,
}

impl FormulaSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if the formula was already present.
    pub fn insert(&mut self, f: Formula) -> bool {
        self.items.insert(f)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.items.contains(f)
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.items.get_index_of(f)
    }

    pub fn get(&self, i: usize) -> Option<&Formula> {
        self.items.get_index(i)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Formula> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &indexmap::set::Slice<Formula> {
        self.items.as_slice()
    }

    pub fn to_vec(&self) -> Vec<Formula> {
        self.items.iter().cloned().collect()
    }

    pub fn is_subset(&self, other: &FormulaSet) -> bool {
        self.items.iter().all(|f| other.contains(f))
    }

    /// First member whose immediate subformulas are not all present.
    pub fn first_unclosed(&self) -> Option<&Formula> {
        self.items
            .iter()
            .flat_map(|f| f.children())
            .find(|c| !self.contains(c))
    }

    pub fn is_subformula_closed(&self) -> bool {
        self.first_unclosed().is_none()
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        FormulaSet {
            items: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = indexmap::set::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Smallest superset of `fs` closed under immediate subformulas. Members of
/// `fs` keep their order; new subformulas follow in breadth-first discovery
/// order.
pub fn subformula_closure(fs: &FormulaSet) -> FormulaSet {
    let mut out = fs.clone();
    let mut i = 0;
    while i < out.len() {
        let children: Vec<Formula> = out.items[i].children().into_iter().cloned().collect();
        for c in children {
            out.insert(c);
        }
        i += 1;
    }
    out
}
