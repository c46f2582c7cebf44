//! Inclusion-minimal hitting sets of a family of column sets.

use std::collections::BTreeSet;

use crate::configuration::ColumnSet;

/// All inclusion-minimal sets meeting every member of `family`, in
/// increasing bitmask order. An empty family is hit by the empty set; a
/// family containing the empty set has no hitting set.
pub fn minimal_hitting_sets(family: &[ColumnSet]) -> Vec<ColumnSet> {
    if family.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    branch(family, ColumnSet::EMPTY, &mut found);
    found.into_iter().collect()
}

/// Every element of `h` must keep a private member of the family (one it
/// alone hits); otherwise no superset of `h` is minimal.
fn irredundant(family: &[ColumnSet], h: ColumnSet) -> bool {
    h.iter().all(|e| {
        family
            .iter()
            .any(|s| s.intersection(h) == ColumnSet::singleton(e))
    })
}

fn branch(family: &[ColumnSet], h: ColumnSet, found: &mut BTreeSet<ColumnSet>) {
    let Some(unhit) = family.iter().find(|s| !s.intersects(h)) else {
        found.insert(h);
        return;
    };
    for e in unhit.iter() {
        let next = h.with(e);
        if irredundant(family, next) {
            branch(family, next, found);
        }
    }
}
