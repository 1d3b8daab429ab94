//! Index dispatch and row rendering shared by the CLI and the C ABI.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coalition::Coalition;
use crate::coopetition::{attitude, require_pair};
use crate::decisiveness::model_bundle;
use crate::distribution::Model;
use crate::error::{Error, Result};
use crate::game::{Representation, SimpleGame};
use crate::power::{
    generalized_shapley, interaction_indicator, profitability, shapley_interaction,
};
use crate::rational::{int, render, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Coopetition,
    Decisiveness,
    Cooperative,
    Competitive,
    Attitude,
    ShapleyGen,
    Profitability,
    Interaction,
    InteractionIndicator,
}

impl IndexKind {
    pub const ALL: [IndexKind; 9] = [
        IndexKind::Coopetition,
        IndexKind::Decisiveness,
        IndexKind::Cooperative,
        IndexKind::Competitive,
        IndexKind::Attitude,
        IndexKind::ShapleyGen,
        IndexKind::Profitability,
        IndexKind::Interaction,
        IndexKind::InteractionIndicator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Coopetition => "coopetition",
            IndexKind::Decisiveness => "decisiveness",
            IndexKind::Cooperative => "cooperative",
            IndexKind::Competitive => "competitive",
            IndexKind::Attitude => "attitude",
            IndexKind::ShapleyGen => "shapley-gen",
            IndexKind::Profitability => "profitability",
            IndexKind::Interaction => "interaction",
            IndexKind::InteractionIndicator => "interaction-indicator",
        }
    }

    /// Whether the index is evaluated against a fixed outside coalition.
    pub fn needs_against(self) -> bool {
        matches!(self, IndexKind::Attitude | IndexKind::InteractionIndicator)
    }

    /// Whether the value depends on the Banzhaf / Shapley-Owen choice.
    pub fn uses_model(self) -> bool {
        matches!(
            self,
            IndexKind::Coopetition
                | IndexKind::Decisiveness
                | IndexKind::Cooperative
                | IndexKind::Competitive
                | IndexKind::Attitude
        )
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown index `{s}`")))
    }
}

/// Computes one index value for `S`.
pub fn compute_index(
    game: &SimpleGame,
    s: Coalition,
    index: IndexKind,
    model: Model,
    against: Option<Coalition>,
) -> Result<Rational> {
    match (index.needs_against(), against) {
        (true, None) => {
            return Err(Error::Parse(format!("index `{index}` requires --against")));
        }
        (false, Some(_)) => {
            return Err(Error::Parse(format!(
                "index `{index}` does not take --against"
            )));
        }
        _ => {}
    }
    let t = against.unwrap_or(Coalition::EMPTY);
    match index {
        IndexKind::Coopetition => Ok(model_bundle(game, s, model)?.coopetition),
        IndexKind::Decisiveness => Ok(model_bundle(game, s, model)?.decisiveness),
        IndexKind::Cooperative => Ok(model_bundle(game, s, model)?.cooperative),
        IndexKind::Competitive => Ok(model_bundle(game, s, model)?.competitive),
        IndexKind::Attitude => attitude(game, s, t, &model.partition()),
        IndexKind::ShapleyGen => generalized_shapley(game, s),
        IndexKind::Profitability => profitability(game, s),
        IndexKind::Interaction => shapley_interaction(game, s),
        IndexKind::InteractionIndicator => Ok(int(interaction_indicator(game, s, t)?)),
    }
}

/// One emitted value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRow {
    pub coalition: Vec<usize>,
    pub size: usize,
    pub index: String,
    pub model: String,
    pub value: String,
}

impl OutputRow {
    pub fn new(s: Coalition, index: IndexKind, model: Model, value: &Rational) -> Self {
        OutputRow {
            coalition: s.ids(),
            size: s.len(),
            index: index.name().to_string(),
            model: if index.uses_model() {
                model.name().to_string()
            } else {
                "-".to_string()
            },
            value: render(value),
        }
    }

    fn coalition_text(&self) -> String {
        if self.coalition.is_empty() {
            "{}".to_string()
        } else {
            self.coalition
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

/// Renders rows; output ends with a newline.
pub fn render_rows(rows: &[OutputRow], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("coalition,size,index,model,value\n");
            for r in rows {
                s.push_str(&format!(
                    "\"{}\",{},{},{},{}\n",
                    r.coalition_text(),
                    r.size,
                    r.index,
                    r.model,
                    r.value
                ));
            }
            s
        }
        Format::Table => {
            let header = ["coalition", "size", "index", "model", "value"];
            let cells: Vec<[String; 5]> = rows
                .iter()
                .map(|r| {
                    [
                        r.coalition_text(),
                        r.size.to_string(),
                        r.index.clone(),
                        r.model.clone(),
                        r.value.clone(),
                    ]
                })
                .collect();
            let mut widths = header.map(str::len);
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cols: [&str; 5]| {
                let parts: Vec<String> = cols
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                let mut l = parts.join("  ").trim_end().to_string();
                l.push('\n');
                l
            };
            let mut s = line(header);
            for row in &cells {
                s.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
            }
            s
        }
    }
}

/// True when `v(S)` depends only on `|S|`.
pub fn is_symmetric(game: &SimpleGame) -> bool {
    if let Representation::Majority(_) = game.representation() {
        return true;
    }
    let mut by_size: Vec<Option<bool>> = vec![None; game.n() + 1];
    game.grand_coalition().subsets().all(|s| {
        let w = game.wins(s);
        *by_size[s.len()].get_or_insert(w) == w
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSpec {
    pub index: IndexKind,
    pub model: Model,
    pub min_size: usize,
    pub max_size: usize,
    pub collapse_symmetric: bool,
}

/// One row per coalition with size in range, ordered by size then bit
/// pattern; or one row per size (on `{1..s}`) when collapsing a symmetric
/// game.
pub fn sweep(game: &SimpleGame, spec: SweepSpec) -> Result<Vec<OutputRow>> {
    if spec.index.needs_against() {
        return Err(Error::Parse(format!(
            "index `{}` cannot be swept",
            spec.index
        )));
    }
    let lower = if spec.index.uses_model() { 2 } else { 1 };
    if spec.min_size < lower || spec.min_size > spec.max_size || spec.max_size > game.n() {
        return Err(Error::Parse(format!(
            "size bounds must satisfy {lower} <= min <= max <= {}, got {}..{}",
            game.n(),
            spec.min_size,
            spec.max_size
        )));
    }
    if spec.collapse_symmetric {
        if !is_symmetric(game) {
            return Err(Error::Parse(
                "--collapse-symmetric needs a symmetric game".into(),
            ));
        }
        return (spec.min_size..=spec.max_size)
            .map(|k| {
                let s = Coalition::full(k);
                let v = compute_index(game, s, spec.index, spec.model, None)?;
                Ok(OutputRow::new(s, spec.index, spec.model, &v))
            })
            .collect();
    }
    let mut coalitions: Vec<Coalition> = game
        .grand_coalition()
        .subsets()
        .filter(|s| (spec.min_size..=spec.max_size).contains(&s.len()))
        .collect();
    coalitions.sort_by_key(|s| (s.len(), s.bits()));
    coalitions
        .into_iter()
        .map(|s| {
            if spec.index.uses_model() {
                require_pair(game, s)?;
            }
            let v = compute_index(game, s, spec.index, spec.model, None)?;
            Ok(OutputRow::new(s, spec.index, spec.model, &v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::PlayerId;
    use crate::rational::parse_rational;

    fn c(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied()).unwrap()
    }

    #[test]
    fn dispatch_examples() {
        let g = SimpleGame::weighted(vec![50, 50, 50, 24, 23, 1], 102).unwrap();
        let v = compute_index(
            &g,
            c(&[4, 5, 6]),
            IndexKind::Profitability,
            Model::ShapleyOwen,
            None,
        )
        .unwrap();
        assert_eq!(render(&v), "1/20");
        let apex = SimpleGame::apex(6, PlayerId::new(1).unwrap()).unwrap();
        let d = compute_index(
            &apex,
            c(&[2, 3]),
            IndexKind::Decisiveness,
            Model::Banzhaf,
            None,
        )
        .unwrap();
        assert_eq!(render(&d), "1/8");
        assert!(compute_index(&g, c(&[1, 2]), IndexKind::Attitude, Model::Banzhaf, None).is_err());
        assert!(compute_index(
            &g,
            c(&[1, 2]),
            IndexKind::Coopetition,
            Model::Banzhaf,
            Some(c(&[3]))
        )
        .is_err());
        assert!(compute_index(
            &g,
            c(&[1, 2]),
            IndexKind::Attitude,
            Model::Banzhaf,
            Some(c(&[2]))
        )
        .is_err());
        assert!(compute_index(&g, c(&[1]), IndexKind::Coopetition, Model::Banzhaf, None).is_err());
    }

    #[test]
    fn index_names_round_trip() {
        for k in IndexKind::ALL {
            assert_eq!(k.name().parse::<IndexKind>().unwrap(), k);
        }
        assert!("shapley".parse::<IndexKind>().is_err());
    }

    #[test]
    fn sweep_order_and_collapse() {
        let apex = SimpleGame::apex(5, PlayerId::new(1).unwrap()).unwrap();
        let spec = SweepSpec {
            index: IndexKind::Coopetition,
            model: Model::ShapleyOwen,
            min_size: 2,
            max_size: 5,
            collapse_symmetric: false,
        };
        let rows = sweep(&apex, spec).unwrap();
        assert_eq!(rows.len(), 26);
        assert!(rows.iter().all(|r| r.value == "0"));
        assert!(rows.windows(2).all(|w| w[0].size <= w[1].size));
        assert!(sweep(
            &apex,
            SweepSpec {
                collapse_symmetric: true,
                ..spec
            }
        )
        .is_err());
        assert!(sweep(
            &apex,
            SweepSpec {
                min_size: 1,
                ..spec
            }
        )
        .is_err());

        let maj = SimpleGame::majority(8, 6).unwrap();
        let rows = sweep(
            &maj,
            SweepSpec {
                collapse_symmetric: true,
                ..spec
            },
        )
        .unwrap();
        let values: Vec<_> = rows.iter().map(|r| r.value.as_str()).collect();
        assert_eq!(
            values,
            ["0", "0", "1/5", "3/8", "3/5", "1/2", "3/7"][..values.len()]
        );
        assert_eq!(rows.len(), 4);

        let single = SimpleGame::from_mwc_ids(3, &[&[1, 2, 3]]).unwrap();
        let rows = sweep(
            &single,
            SweepSpec {
                min_size: 3,
                max_size: 3,
                ..spec
            },
        )
        .unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].value, "1");
    }

    #[test]
    fn rendering_formats() {
        let rows = vec![
            OutputRow::new(
                c(&[1, 2]),
                IndexKind::Coopetition,
                Model::Banzhaf,
                &crate::rational::ratio(-1, 3),
            ),
            OutputRow::new(c(&[4]), IndexKind::ShapleyGen, Model::Banzhaf, &int(0)),
        ];
        let table = render_rows(&rows, Format::Table);
        assert!(table.starts_with("coalition  size  index"));
        assert!(table.contains("-1/3"));
        let csv = render_rows(&rows, Format::Csv);
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "\"1,2\",2,coopetition,banzhaf,-1/3"
        );
        let json: serde_json::Value =
            serde_json::from_str(&render_rows(&rows, Format::Json)).unwrap();
        assert_eq!(json[1]["model"], "-");
        for r in &rows {
            assert_eq!(render(&parse_rational(&r.value).unwrap()), r.value);
        }
    }
}
