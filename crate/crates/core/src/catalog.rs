//! The built-in example groups.

use crate::expr::{parse_group_expr, GroupExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Canonical group expression.
    pub name: String,
    pub solvable: bool,
}

const NONSOLVABLE: [&str; 9] = [
    "A5", "S5", "SL2(5)", "A5 x C2", "PSL2(7)", "A5 x C3", "SL2(7)", "A6", "PSL2(8)",
];

/// Solvable entries first, then nonsolvable ones.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut names: Vec<String> = (1..=16).map(|n| format!("C{n}")).collect();
    names.extend((1..=8).map(|n| format!("D{n}")));
    names.extend(
        ["Q8", "S3", "S4", "A4", "C2 x C2", "C3 x C3", "C2 x C4"]
            .iter()
            .map(|s| s.to_string()),
    );
    let mut out: Vec<CatalogEntry> = names
        .into_iter()
        .map(|name| CatalogEntry {
            name,
            solvable: true,
        })
        .collect();
    out.extend(NONSOLVABLE.iter().map(|s| CatalogEntry {
        name: s.to_string(),
        solvable: false,
    }));
    out
}

pub fn nonsolvable() -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| !e.solvable).collect()
}

impl CatalogEntry {
    pub fn expr(&self) -> GroupExpr {
        parse_group_expr(&self.name).expect("catalog names parse")
    }
}

/// The catalog entry a group expression denotes, if any.
pub fn lookup(expr: &GroupExpr) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.expr() == *expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::elaborate;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::structure::is_solvable;

    #[test]
    fn labels_match_solvability() {
        let all = catalog();
        assert_eq!(all.len(), 31 + 9);
        for e in all {
            let g = elaborate(&e.expr(), DEFAULT_ORDER_CAP).unwrap();
            assert_eq!(is_solvable(&g), e.solvable, "{}", e.name);
            assert_eq!(e.expr().to_string(), e.name);
        }
    }

    #[test]
    fn lookup_normalizes() {
        let e = lookup(&parse_group_expr("a5xc2").unwrap()).unwrap();
        assert_eq!(e.name, "A5 x C2");
        assert!(lookup(&parse_group_expr("C17").unwrap()).is_none());
    }
}
