//! Small (3,≤4) formulas for end-to-end checks. Satisfiability was settled
//! by brute force when the corpus was frozen and is re-checked in tests.

use crate::solver::CnfFormula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub formula: CnfFormula,
    pub satisfiable: bool,
}

type Row = (&'static str, usize, &'static [[i32; 3]], bool);

const CORPUS: &[Row] = &[
    ("single", 3, &[[1, 2, 3]], true),
    ("two-clauses", 4, &[[1, 2, 3], [-1, 2, 4]], true),
    ("random-00", 4, &[[-1, -2, -3], [-2, -3, 4]], true),
    ("random-01", 5, &[[-1, -3, -5], [2, 3, 4], [2, -3, -4]], true),
    ("random-02", 4, &[[1, 2, 3], [1, 3, 4], [-2, -3, -4]], true),
    ("random-03", 5, &[[-1, 2, 3]], true),
    (
        "random-04",
        4,
        &[[-2, 3, -4], [1, 3, -4], [-1, 3, 4], [-1, 2, 3], [-1, 2, -4]],
        true,
    ),
    ("random-05", 4, &[[-1, 2, -3], [1, -3, -4], [-1, -2, -3]], true),
    ("random-06", 3, &[[-1, -2, 3], [1, -2, 3]], true),
    ("random-07", 3, &[[-1, -2, -3], [1, 2, 3]], true),
    (
        "random-08",
        5,
        &[[2, 3, 5], [-3, 4, -5], [-3, -4, 5], [1, -2, 4], [1, -2, 3]],
        true,
    ),
    (
        "random-09",
        4,
        &[[-1, 3, 4], [1, 2, 3], [1, -3, 4], [-1, -2, 4], [-2, -3, 4]],
        true,
    ),
    (
        "random-10",
        5,
        &[[-3, -4, -5], [-2, 3, 5], [-2, 3, -4], [-2, -3, 4], [1, -2, 5]],
        true,
    ),
    (
        "random-11",
        4,
        &[[2, -3, -4], [1, 3, 4], [-2, -3, -4], [-1, 2, 4], [1, 2, -3]],
        true,
    ),
    (
        "random-12",
        3,
        &[[1, 2, -3], [-1, 2, -3], [-1, -2, -3], [-1, -2, 3]],
        true,
    ),
    ("random-13", 5, &[[2, -4, 5], [1, -4, 5], [-1, -2, -4]], true),
    ("random-14", 3, &[[1, 2, 3], [1, -2, 3], [1, 2, 3]], true),
    ("random-15", 5, &[[-1, -2, -3], [-1, 2, 5], [2, 4, 5]], true),
    ("random-16", 3, &[[1, -2, -3]], true),
    (
        "random-17",
        5,
        &[[-1, -2, -4], [2, -4, -5], [-1, -2, 4], [1, -3, -5]],
        true,
    ),
    ("random-18", 4, &[[-2, 3, 4], [2, 3, 4], [1, 2, 4]], true),
    ("random-19", 5, &[[1, -2, -5], [1, 3, -4], [-2, 4, 5]], true),
    ("random-20", 3, &[[-1, 2, 3], [1, -2, 3], [1, 2, -3]], true),
    (
        "random-21",
        5,
        &[[1, 2, -5], [-1, -3, -4], [-2, 4, 5], [-2, -3, -5]],
        true,
    ),
    // three blocks each forcing their first variable false, plus a clause
    // needing one of them true
    (
        "forced-triple",
        12,
        &[
            [-1, -2, 4],
            [-1, 2, 3],
            [-1, -3, -4],
            [2, -3, 4],
            [-2, 3, -4],
            [-5, -6, 8],
            [-5, 6, 7],
            [-5, -7, -8],
            [6, -7, 8],
            [-6, 7, -8],
            [-9, -10, 12],
            [-9, 10, 11],
            [-9, -11, -12],
            [10, -11, 12],
            [-10, 11, -12],
            [1, 5, 9],
        ],
        false,
    ),
];

pub fn fixture_corpus() -> Vec<Fixture> {
    CORPUS
        .iter()
        .map(|&(name, vars, clauses, satisfiable)| Fixture {
            name,
            formula: CnfFormula::new(vars, clauses.iter().map(|c| c.to_vec()).collect()),
            satisfiable,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::validate_3le4;

    #[test]
    fn corpus_is_valid_and_labels_hold() {
        let corpus = fixture_corpus();
        assert!(corpus.len() >= 20);
        assert!(corpus.iter().any(|f| !f.satisfiable));
        for f in &corpus {
            assert!(validate_3le4(&f.formula).ok, "{}", f.name);
            assert_eq!(f.formula.brute_force_model().is_some(), f.satisfiable, "{}", f.name);
        }
    }
}
