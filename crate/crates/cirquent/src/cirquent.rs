//! Shallow cirquents: a conjunction of disjunctive groups over a shared
//! row of formula occurrences.
//!
//! A cirquent holds an ordered sequence of formula occurrences and an
//! ordered sequence of groups; each group is the set of occurrence
//! indices its arcs point to. Two occurrences of the same formula are
//! distinct objects — sharing is expressed by arcs, never by formula
//! equality.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::Formula;

/// A shallow cirquent. Structurally valid by construction: groups are
/// nonempty, arcs are in range, and no occurrence is left without an arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cirquent {
    formulas: Vec<Formula>,
    groups: Vec<BTreeSet<usize>>,
}

/// Termination measure for backward search. Ordered lexicographically:
/// connectives first, then arcs plus groups. Every backward rule strictly
/// decreases it, and Exchange leaves it unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Measure {
    pub connectives: usize,
    pub arcs_plus_groups: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CirquentError {
    #[error("a cirquent needs at least one formula occurrence")]
    Empty,
    #[error("group {group} is empty")]
    EmptyGroup { group: usize },
    #[error("group {group} points at formula {index}, but there are only {len} formulas")]
    ArcOutOfRange { group: usize, index: usize, len: usize },
    #[error("formula occurrence {index} has no arc to any group")]
    OrphanFormula { index: usize },
    #[error("group {group} lists formula {index} more than once")]
    DuplicateArc { group: usize, index: usize },
}

impl Cirquent {
    /// Builds a cirquent, checking the structural invariants.
    pub fn new(
        formulas: Vec<Formula>,
        groups: Vec<BTreeSet<usize>>,
    ) -> Result<Cirquent, CirquentError> {
        if formulas.is_empty() {
            return Err(CirquentError::Empty);
        }
        let mut covered = vec![false; formulas.len()];
        for (g, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(CirquentError::EmptyGroup { group: g });
            }
            for &index in group {
                if index >= formulas.len() {
                    return Err(CirquentError::ArcOutOfRange {
                        group: g,
                        index,
                        len: formulas.len(),
                    });
                }
                covered[index] = true;
            }
        }
        if let Some(index) = covered.iter().position(|c| !c) {
            return Err(CirquentError::OrphanFormula { index });
        }
        Ok(Cirquent { formulas, groups })
    }

    /// The single-group embedding of a lone formula.
    pub fn from_formula(f: Formula) -> Cirquent {
        Cirquent {
            formulas: vec![f],
            groups: vec![BTreeSet::from([0])],
        }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn groups(&self) -> &[BTreeSet<usize>] {
        &self.groups
    }

    pub fn arc_count(&self) -> usize {
        self.groups.iter().map(|g| g.len()).sum()
    }

    /// Groups containing the occurrence at `index`.
    pub fn groups_containing(&self, index: usize) -> Vec<usize> {
        (0..self.groups.len())
            .filter(|&g| self.groups[g].contains(&index))
            .collect()
    }

    pub fn measure(&self) -> Measure {
        Measure {
            connectives: self.formulas.iter().map(|f| f.connective_count()).sum(),
            arcs_plus_groups: self.arc_count() + self.groups.len(),
        }
    }

    /// Whether this is an axiom: every group is a pair of mutually dual
    /// occurrences and every occurrence carries exactly one arc. Layout
    /// and pair order do not matter.
    pub fn is_axiom(&self) -> bool {
        if self.formulas.len() != 2 * self.groups.len() {
            return false;
        }
        let mut arcs_per_formula = vec![0usize; self.formulas.len()];
        for group in &self.groups {
            if group.len() != 2 {
                return false;
            }
            let mut it = group.iter();
            let (&i, &j) = (it.next().unwrap(), it.next().unwrap());
            if self.formulas[j] != self.formulas[i].dual() {
                return false;
            }
            arcs_per_formula[i] += 1;
            arcs_per_formula[j] += 1;
        }
        arcs_per_formula.iter().all(|&n| n == 1)
    }

    /// True when the other cirquent is reachable from this one by
    /// adjacent swaps of formulas and groups.
    pub fn is_exchange_equivalent(&self, other: &Cirquent) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Rebuilds the cirquent under a formula and group relabeling:
    /// `formula_perm[old] = new` position, likewise for groups.
    pub(crate) fn permuted(&self, formula_perm: &[usize], group_perm: &[usize]) -> Cirquent {
        debug_assert_eq!(formula_perm.len(), self.formulas.len());
        debug_assert_eq!(group_perm.len(), self.groups.len());
        let mut formulas = vec![None; self.formulas.len()];
        for (old, f) in self.formulas.iter().enumerate() {
            formulas[formula_perm[old]] = Some(f.clone());
        }
        let mut groups = vec![BTreeSet::new(); self.groups.len()];
        for (old, group) in self.groups.iter().enumerate() {
            groups[group_perm[old]] = group.iter().map(|&i| formula_perm[i]).collect();
        }
        Cirquent {
            formulas: formulas.into_iter().map(Option::unwrap).collect(),
            groups,
        }
    }

    pub(crate) fn swap_adjacent_formulas(&self, position: usize) -> Cirquent {
        let mut formula_perm: Vec<usize> = (0..self.formulas.len()).collect();
        formula_perm.swap(position, position + 1);
        let group_perm: Vec<usize> = (0..self.groups.len()).collect();
        self.permuted(&formula_perm, &group_perm)
    }

    pub(crate) fn swap_adjacent_groups(&self, position: usize) -> Cirquent {
        let mut groups = self.groups.clone();
        groups.swap(position, position + 1);
        Cirquent {
            formulas: self.formulas.clone(),
            groups,
        }
    }

    /// Computes the canonical representative of this cirquent's
    /// Exchange-equivalence class, together with the permutation pair
    /// that maps this cirquent onto it.
    ///
    /// Exact: two cirquents canonicalize to the same representative if
    /// and only if one can be turned into the other by adjacent swaps.
    /// Occurrences are first partitioned by printed formula and then by
    /// iteratively refined arc signatures; a backtracking search over the
    /// remaining within-cell orderings picks the lexicographically least
    /// group table.
    pub fn canonicalize(&self) -> CanonicalForm {
        Canonicalizer::new(self).run()
    }
}

impl fmt::Display for Cirquent {
    /// Compact one-line form: formulas, then one arc set per group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, formula) in self.formulas.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{formula}")?;
        }
        write!(f, "]")?;
        for group in &self.groups {
            write!(f, " {{")?;
            for (k, index) in group.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{index}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// A canonical representative plus the permutations that produced it.
///
/// Equality and hashing look only at the representative, so two
/// `CanonicalForm`s compare equal exactly when their sources are
/// Exchange-equivalent.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    cirquent: Cirquent,
    formula_perm: Vec<usize>,
    group_perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn cirquent(&self) -> &Cirquent {
        &self.cirquent
    }

    pub fn into_cirquent(self) -> Cirquent {
        self.cirquent
    }

    /// `formula_perm()[old]` is the occurrence's position in the
    /// representative.
    pub fn formula_perm(&self) -> &[usize] {
        &self.formula_perm
    }

    pub fn group_perm(&self) -> &[usize] {
        &self.group_perm
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.cirquent == other.cirquent
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cirquent.hash(state);
    }
}

struct Canonicalizer<'a> {
    source: &'a Cirquent,
    /// Cells of occurrence indices; cell order is isomorphism-invariant.
    cells: Vec<Vec<usize>>,
    best_groups: Option<Vec<Vec<usize>>>,
    best_perm: Vec<usize>,
}

impl<'a> Canonicalizer<'a> {
    fn new(source: &'a Cirquent) -> Self {
        Canonicalizer {
            source,
            cells: refine_cells(source),
            best_groups: None,
            best_perm: Vec::new(),
        }
    }

    fn run(mut self) -> CanonicalForm {
        let n = self.source.formulas.len();
        let mut perm = vec![usize::MAX; n];
        let mut slot = 0;
        let cells = std::mem::take(&mut self.cells);
        self.assign_cell(&cells, 0, &mut perm, &mut slot);

        let formula_perm = self.best_perm.clone();
        let group_table = self.best_groups.expect("at least one candidate ordering");

        // Stable order of the original groups by their relabeled arc sets.
        let mapped: Vec<Vec<usize>> = self
            .source
            .groups
            .iter()
            .map(|g| {
                let mut v: Vec<usize> = g.iter().map(|&i| formula_perm[i]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut order: Vec<usize> = (0..mapped.len()).collect();
        order.sort_by(|&a, &b| mapped[a].cmp(&mapped[b]).then(a.cmp(&b)));
        let mut group_perm = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            group_perm[old] = new;
        }

        let cirquent = self.source.permuted(&formula_perm, &group_perm);
        debug_assert_eq!(
            cirquent.groups,
            group_table
                .iter()
                .map(|g| g.iter().copied().collect::<BTreeSet<usize>>())
                .collect::<Vec<_>>()
        );
        CanonicalForm {
            cirquent,
            formula_perm,
            group_perm,
        }
    }

    /// Depth-first over cells, trying every within-cell ordering and
    /// keeping the permutation whose sorted group table is least.
    /// Occurrences belonging to exactly the same groups are
    /// interchangeable, so only one ordering per twin class is tried.
    fn assign_cell(
        &mut self,
        cells: &[Vec<usize>],
        cell: usize,
        perm: &mut Vec<usize>,
        slot: &mut usize,
    ) {
        if cell == cells.len() {
            self.consider(perm);
            return;
        }
        let members = &cells[cell];
        let memberships: Vec<Vec<usize>> = members
            .iter()
            .map(|&i| self.source.groups_containing(i))
            .collect();
        let mut used = vec![false; members.len()];
        self.permute_cell(cells, cell, &memberships, &mut used, perm, slot);
    }

    fn permute_cell(
        &mut self,
        cells: &[Vec<usize>],
        cell: usize,
        memberships: &[Vec<usize>],
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        slot: &mut usize,
    ) {
        let members = &cells[cell];
        if used.iter().all(|&u| u) {
            self.assign_cell(cells, cell + 1, perm, slot);
            return;
        }
        let mut tried: Vec<&Vec<usize>> = Vec::new();
        for k in 0..members.len() {
            if used[k] || tried.contains(&&memberships[k]) {
                continue;
            }
            tried.push(&memberships[k]);
            used[k] = true;
            perm[members[k]] = *slot;
            *slot += 1;
            self.permute_cell(cells, cell, memberships, used, perm, slot);
            *slot -= 1;
            perm[members[k]] = usize::MAX;
            used[k] = false;
        }
    }

    fn consider(&mut self, perm: &[usize]) {
        let mut table: Vec<Vec<usize>> = self
            .source
            .groups
            .iter()
            .map(|g| {
                let mut v: Vec<usize> = g.iter().map(|&i| perm[i]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        table.sort_unstable();
        if self
            .best_groups
            .as_ref()
            .is_none_or(|best| table < *best)
        {
            self.best_groups = Some(table);
            self.best_perm = perm.to_vec();
        }
    }
}

/// Partitions occurrences into cells by printed formula, then refines by
/// arc signature until stable. Cell order depends only on signature
/// content, never on input layout.
fn refine_cells(c: &Cirquent) -> Vec<Vec<usize>> {
    let n = c.formulas.len();
    let strings: Vec<String> = c.formulas.iter().map(|f| f.to_string()).collect();

    let mut keys: Vec<String> = strings.clone();
    keys.sort();
    keys.dedup();
    let mut colors: Vec<usize> = strings
        .iter()
        .map(|s| keys.binary_search(s).unwrap())
        .collect();
    let mut distinct = keys.len();

    loop {
        let group_sigs: Vec<Vec<usize>> = c
            .groups
            .iter()
            .map(|g| {
                let mut sig: Vec<usize> = g.iter().map(|&i| colors[i]).collect();
                sig.sort_unstable();
                sig
            })
            .collect();
        let occ_sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|i| {
                let mut around: Vec<Vec<usize>> = c
                    .groups
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.contains(&i))
                    .map(|(g, _)| group_sigs[g].clone())
                    .collect();
                around.sort();
                (colors[i], around)
            })
            .collect();
        let mut sig_keys = occ_sigs.clone();
        sig_keys.sort();
        sig_keys.dedup();
        if sig_keys.len() == distinct {
            break;
        }
        distinct = sig_keys.len();
        colors = occ_sigs
            .iter()
            .map(|s| sig_keys.binary_search(s).unwrap())
            .collect();
    }

    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); distinct];
    for i in 0..n {
        cells[colors[i]].push(i);
    }
    cells.retain(|c| !c.is_empty());
    cells
}
