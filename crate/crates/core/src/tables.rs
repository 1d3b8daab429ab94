//! Built-in reference tables, recomputed from scratch and diffed against
//! embedded expected values.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::coalition::{Coalition, PlayerId};
use crate::decisiveness::model_bundle;
use crate::distribution::Model;
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::oracles::apex_closed_forms;
use crate::power::shapley_interaction;
use crate::rational::{int, pow2, ratio, render, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Interaction,
    Coopetition,
    MajorityEight,
    MajorityNine,
    Apex,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::Interaction,
        TableId::Coopetition,
        TableId::MajorityEight,
        TableId::MajorityNine,
        TableId::Apex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Interaction => "1",
            TableId::Coopetition => "2",
            TableId::MajorityEight => "3",
            TableId::MajorityNine => "4",
            TableId::Apex => "apex",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!("unknown table `{s}` (expected 1, 2, 3, 4 or apex)"))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Match,
    /// Computed value equals the definition; the printed value has the
    /// same magnitude and the opposite sign.
    SignErratum,
    Mismatch,
}

impl CellStatus {
    pub fn is_ok(self) -> bool {
        self != CellStatus::Mismatch
    }

    fn label(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::SignErratum => "sign-erratum",
            CellStatus::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub row: String,
    pub column: String,
    pub expected: String,
    pub computed: String,
    /// The published value where it differs from `expected`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: String,
    pub title: String,
    pub cells: Vec<TableCell>,
}

impl TableReport {
    pub fn mismatches(&self) -> usize {
        self.cells.iter().filter(|c| !c.status.is_ok()).count()
    }

    pub fn errata(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.status == CellStatus::SignErratum)
            .count()
    }

    pub fn is_match(&self) -> bool {
        self.mismatches() == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table {}: {}", self.table, self.title)?;
        let header = ["row", "column", "expected", "computed", "printed", "status"];
        let rows: Vec<[String; 6]> = self
            .cells
            .iter()
            .map(|c| {
                [
                    c.row.clone(),
                    c.column.clone(),
                    c.expected.clone(),
                    c.computed.clone(),
                    c.printed.clone().unwrap_or_else(|| "-".into()),
                    c.status.label().to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        let mut line = |cols: Vec<&str>| -> fmt::Result {
            let parts: Vec<String> = cols
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(f, "{}", parts.join("  ").trim_end())
        };
        line(header.to_vec())?;
        for r in &rows {
            line(r.iter().map(String::as_str).collect())?;
        }
        writeln!(
            f,
            "{} cells, {} matched, {} sign errata, {} mismatches",
            self.cells.len(),
            self.cells.len() - self.mismatches() - self.errata(),
            self.errata(),
            self.mismatches()
        )
    }
}

fn cell(row: String, column: String, expected: &Rational, computed: &Rational) -> TableCell {
    let status = if expected == computed {
        CellStatus::Match
    } else {
        CellStatus::Mismatch
    };
    TableCell {
        row,
        column,
        expected: render(expected),
        computed: render(computed),
        printed: None,
        status,
    }
}

/// A cell whose trusted value is the definition's and whose printed value
/// may differ in sign.
fn erratum_cell(
    row: String,
    column: String,
    expected: &Rational,
    printed: &Rational,
    computed: &Rational,
) -> TableCell {
    let mut c = cell(row, column, expected, computed);
    if printed != expected {
        c.printed = Some(render(printed));
        if c.status == CellStatus::Match {
            c.status = if printed.abs() == computed.abs() && *printed == -computed.clone() {
                CellStatus::SignErratum
            } else {
                CellStatus::Mismatch
            };
        }
    }
    c
}

fn ids(list: &[usize]) -> Coalition {
    Coalition::from_ids(list.iter().copied()).expect("static coalition")
}

/// The three five-player games whose minimal winning coalitions differ in
/// how `{1,2,3,4}` is split.
pub fn split_games() -> [(&'static str, SimpleGame); 3] {
    let mk = |sets: &[&[usize]]| SimpleGame::from_mwc_ids(5, sets).expect("static game");
    [
        ("v", mk(&[&[1, 2, 3, 4], &[1, 4, 5]])),
        ("w", mk(&[&[1, 2, 3], &[3, 4], &[1, 4, 5]])),
        ("u", mk(&[&[1, 2], &[3, 4], &[1, 4, 5]])),
    ]
}

type Frac = (i64, i64);

// (coalition, game, definition value, printed value)
const INTERACTION: [(&[usize], &str, Frac, Frac); 6] = [
    (&[1, 2, 3, 4], "v", (1, 2), (-1, 2)),
    (&[1, 2, 3, 4], "w", (-1, 1), (1, 1)),
    (&[1, 2, 3, 4], "u", (-1, 2), (1, 2)),
    (&[1, 2, 3, 4, 5], "v", (-1, 1), (-1, 1)),
    (&[1, 2, 3, 4, 5], "w", (0, 1), (0, 1)),
    (&[1, 2, 3, 4, 5], "u", (1, 1), (1, 1)),
];

fn interaction_table() -> Result<TableReport> {
    let games = split_games();
    let mut cells = Vec::new();
    for (coalition, name, def, printed) in INTERACTION {
        let game = &games
            .iter()
            .find(|(n, _)| *n == name)
            .expect("known game")
            .1;
        let s = ids(coalition);
        let computed = shapley_interaction(game, s)?;
        cells.push(erratum_cell(
            s.to_string(),
            name.to_string(),
            &ratio(def.0, def.1),
            &ratio(printed.0, printed.1),
            &computed,
        ));
    }
    Ok(TableReport {
        table: "1".into(),
        title: "Shapley interaction index of 1234 and 12345 in games v, w, u".into(),
        cells,
    })
}

// (coalition, model, [v, w, u])
const COOPETITION: [(&[usize], Model, [Frac; 3]); 4] = [
    (&[1, 2, 3, 4], Model::ShapleyOwen, [(7, 9), (1, 4), (1, 18)]),
    (
        &[1, 2, 3, 4, 5],
        Model::ShapleyOwen,
        [(13, 20), (1, 5), (1, 20)],
    ),
    (&[1, 2, 3, 4], Model::Banzhaf, [(11, 14), (2, 7), (1, 14)]),
    (
        &[1, 2, 3, 4, 5],
        Model::Banzhaf,
        [(11, 15), (4, 15), (1, 15)],
    ),
];

fn coopetition_table() -> Result<TableReport> {
    let games = split_games();
    let mut cells = Vec::new();
    for (coalition, model, values) in COOPETITION {
        let s = ids(coalition);
        for ((name, game), (num, den)) in games.iter().zip(values) {
            let computed = model_bundle(game, s, model)?.coopetition;
            cells.push(cell(
                s.to_string(),
                format!("{model} {name}"),
                &ratio(num, den),
                &computed,
            ));
        }
    }
    Ok(TableReport {
        table: "2".into(),
        title: "Shapley-Owen and Banzhaf coopetition of 1234 and 12345 in games v, w, u".into(),
        cells,
    })
}

// Rows are sizes 2..=8; each row lists (C, D) for quotas 5, 6, 7, 8.
const MAJORITY_EIGHT: [[(Frac, Frac); 4]; 7] = [
    [
        ((0, 1), (2, 7)),
        ((0, 1), (2, 7)),
        ((0, 1), (2, 7)),
        ((1, 7), (1, 7)),
    ],
    [
        ((0, 1), (1, 3)),
        ((0, 1), (1, 3)),
        ((1, 6), (1, 6)),
        ((1, 6), (1, 6)),
    ],
    [
        ((0, 1), (8, 15)),
        ((1, 5), (1, 3)),
        ((1, 6), (1, 6)),
        ((1, 6), (1, 6)),
    ],
    [
        ((1, 4), (1, 2)),
        ((3, 8), (3, 8)),
        ((3, 8), (3, 8)),
        ((1, 4), (1, 4)),
    ],
    [
        ((1, 5), (1, 3)),
        ((3, 5), (3, 5)),
        ((8, 15), (8, 15)),
        ((1, 3), (1, 3)),
    ],
    [
        ((1, 6), (1, 6)),
        ((1, 2), (1, 2)),
        ((5, 6), (5, 6)),
        ((1, 2), (1, 2)),
    ],
    [
        ((1, 7), (1, 7)),
        ((3, 7), (3, 7)),
        ((5, 7), (5, 7)),
        ((1, 1), (1, 1)),
    ],
];

// Rows are sizes 2..=9; each row lists (C, D) for quotas 5..=9.
const MAJORITY_NINE: [[(Frac, Frac); 5]; 8] = [
    [
        ((0, 1), (1, 4)),
        ((0, 1), (1, 4)),
        ((0, 1), (1, 4)),
        ((0, 1), (1, 4)),
        ((1, 8), (1, 8)),
    ],
    [
        ((0, 1), (2, 7)),
        ((0, 1), (2, 7)),
        ((0, 1), (2, 7)),
        ((1, 7), (1, 7)),
        ((1, 7), (1, 7)),
    ],
    [
        ((0, 1), (4, 9)),
        ((0, 1), (4, 9)),
        ((1, 6), (5, 18)),
        ((2, 9), (2, 9)),
        ((1, 6), (1, 6)),
    ],
    [
        ((0, 1), (3, 5)),
        ((1, 5), (2, 5)),
        ((3, 10), (3, 10)),
        ((3, 10), (3, 10)),
        ((1, 5), (1, 5)),
    ],
    [
        ((0, 1), (2, 5)),
        ((2, 5), (1, 2)),
        ((9, 20), (9, 20)),
        ((2, 5), (2, 5)),
        ((1, 4), (1, 4)),
    ],
    [
        ((0, 1), (2, 9)),
        ((1, 3), (1, 3)),
        ((2, 3), (2, 3)),
        ((5, 9), (5, 9)),
        ((1, 3), (1, 3)),
    ],
    [
        ((0, 1), (1, 7)),
        ((2, 7), (2, 7)),
        ((4, 7), (4, 7)),
        ((6, 7), (6, 7)),
        ((1, 2), (1, 2)),
    ],
    [
        ((0, 1), (0, 1)),
        ((1, 4), (1, 4)),
        ((1, 2), (1, 2)),
        ((3, 4), (3, 4)),
        ((1, 1), (1, 1)),
    ],
];

fn majority_table<const Q: usize>(
    table: &str,
    n: usize,
    rows: &[[(Frac, Frac); Q]],
) -> Result<TableReport> {
    let first_quota = n / 2 + 1;
    let mut cells = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let size = i + 2;
        for (j, (c, d)) in row.iter().enumerate() {
            let quota = first_quota + j;
            let game = SimpleGame::majority(n, quota)?;
            let bundle = model_bundle(&game, Coalition::full(size), Model::ShapleyOwen)?;
            let label = format!("s={size}");
            cells.push(cell(
                label.clone(),
                format!("q={quota} C"),
                &ratio(c.0, c.1),
                &bundle.coopetition,
            ));
            cells.push(cell(
                label,
                format!("q={quota} D"),
                &ratio(d.0, d.1),
                &bundle.decisiveness,
            ));
        }
    }
    Ok(TableReport {
        table: table.into(),
        title: format!("Shapley-Owen coopetition C and decisiveness D in majority games, n={n}"),
        cells,
    })
}

/// Banzhaf decisiveness of `S` in an apex game, by case.
pub fn banzhaf_apex_decisiveness(n: usize, s: usize, apex_in_s: bool) -> Rational {
    if s == n {
        Rational::zero()
    } else if apex_in_s {
        Rational::new(
            1.into(),
            (pow2(s as u32 - 1) - 1) * pow2((n - s - 1) as u32),
        )
    } else {
        Rational::new(1.into(), pow2((n - s - 1) as u32))
    }
}

/// Shapley-Owen decisiveness of `S` in an apex game, by case, as obtained
/// from the general apex formula with the Shapley-Owen distributions.
pub fn shapley_owen_apex_decisiveness(n: usize, s: usize, apex_in_s: bool) -> Rational {
    let (n, s) = (n as i64, s as i64);
    if s == n {
        Rational::zero()
    } else if apex_in_s {
        ratio(4, s * (s - 1) * (n - s + 1))
    } else {
        ratio(2, (n - s) * (n - s + 1))
    }
}

/// For `n` in `3..=10`, every `S` with `|S| >= 2` in the apex game with apex
/// 1: both coopetition indices vanish, Banzhaf decisiveness follows its case
/// formula, Shapley-Owen decisiveness equals the general apex formula and its
/// case formula. Cells group coalitions by `(n, |S|, apex in S)`.
fn apex_table() -> Result<TableReport> {
    let a = PlayerId::new(1)?;
    let mut cells = Vec::new();
    for n in 3..=10 {
        let game = SimpleGame::apex(n, a)?;
        for size in 2..=n {
            for apex_in_s in [true, false] {
                if size == n && !apex_in_s {
                    continue;
                }
                let members: Vec<Coalition> = game
                    .grand_coalition()
                    .subsets()
                    .filter(|s| s.len() == size && s.contains(a) == apex_in_s)
                    .collect();
                let row = format!(
                    "n={n} s={size} {}",
                    if apex_in_s { "a in S" } else { "a not in S" }
                );
                let bz_d = banzhaf_apex_decisiveness(n, size, apex_in_s);
                let so_d = shapley_owen_apex_decisiveness(n, size, apex_in_s);
                // Each class reports its first disagreeing member, if any.
                let mut worst: [Option<Rational>; 5] = Default::default();
                let mut general_so = None;
                for &s in &members {
                    let bz = model_bundle(&game, s, Model::Banzhaf)?;
                    let so = model_bundle(&game, s, Model::ShapleyOwen)?;
                    let (_, general) = apex_closed_forms(
                        n,
                        a,
                        s,
                        &Model::ShapleyOwen.partition(),
                        &Model::ShapleyOwen.outside(),
                    )?;
                    let checks = [
                        (bz.coopetition, Rational::zero()),
                        (so.coopetition, Rational::zero()),
                        (bz.decisiveness, bz_d.clone()),
                        (so.decisiveness.clone(), general.clone()),
                        (so.decisiveness, so_d.clone()),
                    ];
                    for (slot, (got, want)) in worst.iter_mut().zip(checks) {
                        if slot.is_none() && got != want {
                            *slot = Some(got);
                        }
                    }
                    general_so.get_or_insert(general);
                }
                let general_so = general_so.expect("nonempty class");
                let expected = [
                    ("Banzhaf C", Rational::zero()),
                    ("Shapley-Owen C", Rational::zero()),
                    ("Banzhaf D", bz_d),
                    ("Shapley-Owen D (general)", general_so),
                    ("Shapley-Owen D (case)", so_d),
                ];
                for ((column, want), bad) in expected.into_iter().zip(worst) {
                    let got = bad.unwrap_or_else(|| want.clone());
                    cells.push(cell(row.clone(), column.to_string(), &want, &got));
                }
            }
        }
    }
    Ok(TableReport {
        table: "apex".into(),
        title: "apex games with apex 1, n=3..10, all coalitions of size >= 2".into(),
        cells,
    })
}

pub fn paper_table(id: TableId) -> Result<TableReport> {
    match id {
        TableId::Interaction => interaction_table(),
        TableId::Coopetition => coopetition_table(),
        TableId::MajorityEight => majority_table("3", 8, &MAJORITY_EIGHT),
        TableId::MajorityNine => majority_table("4", 9, &MAJORITY_NINE),
        TableId::Apex => apex_table(),
    }
}

/// Example four-player games whose triplet `{1,2,3}` has interaction
/// `(1, -2, 1)` by definition; the published triplet is `(-1, 2, -1)`.
pub fn triplet_games() -> [(&'static str, SimpleGame, Rational, Rational); 3] {
    let mk = |sets: &[&[usize]]| SimpleGame::from_mwc_ids(4, sets).expect("static game");
    [
        ("v", mk(&[&[1, 2, 3]]), int(1), int(-1)),
        ("w", mk(&[&[1, 2], &[2, 3], &[1, 3]]), int(-2), int(2)),
        ("u", mk(&[&[1], &[2], &[3]]), int(1), int(-1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interaction_table_flags_errata() {
        let r = paper_table(TableId::Interaction).unwrap();
        assert_eq!(r.cells.len(), 6);
        assert_eq!(r.errata(), 3);
        assert!(r.is_match(), "{r}");
        assert!(r.cells[3..]
            .iter()
            .all(|c| c.status == CellStatus::Match && c.printed.is_none()));
    }

    #[test]
    fn coopetition_table_matches() {
        let r = paper_table(TableId::Coopetition).unwrap();
        assert_eq!(r.cells.len(), 12);
        assert!(r.is_match(), "{r}");
    }

    #[test]
    fn majority_nine_matches() {
        let r = paper_table(TableId::MajorityNine).unwrap();
        assert_eq!(r.cells.len(), 80);
        assert!(r.is_match(), "{r}");
    }

    #[test]
    fn majority_eight_cells() {
        let r = paper_table(TableId::MajorityEight).unwrap();
        assert_eq!(r.cells.len(), 56);
        let bad: Vec<_> = r
            .cells
            .iter()
            .filter(|c| !c.status.is_ok())
            .map(|c| (c.row.as_str(), c.column.as_str(), c.computed.as_str()))
            .collect();
        // The size-4 cells at quotas 7 and 8 repeat the size-3 row.
        assert_eq!(
            bad,
            [
                ("s=4", "q=7 C", "4/15"),
                ("s=4", "q=7 D", "4/15"),
                ("s=4", "q=8 C", "1/5"),
                ("s=4", "q=8 D", "1/5"),
            ]
        );
    }

    #[test]
    fn triplet_signs() {
        for (name, g, def, printed) in triplet_games() {
            let got = shapley_interaction(&g, ids(&[1, 2, 3])).unwrap();
            assert_eq!(got, def, "{name}");
            assert_eq!(got, -printed);
        }
    }

    #[test]
    fn table_names() {
        for t in TableId::ALL {
            assert_eq!(t.name().parse::<TableId>().unwrap(), t);
        }
        assert!("5".parse::<TableId>().is_err());
    }
}
