use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::error::{Error, Result};
use crate::game::{
    summary_from_explicit, Allocation, Coalition, ExplicitGame, GameSummary, Partition, MAX_EXPLICIT_PLAYERS,
};
use crate::scalar::{parse_scalar, Scalar};
use crate::values::ValueSpec;

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RawPlayers {
    Count(usize),
    Labels(Vec<String>),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RawMember {
    Index(usize),
    Label(String),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RawNumber {
    Number(Number),
    Text(String),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawCoalition {
    members: Vec<RawMember>,
    value: RawNumber,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct RawSummary {
    singletons: Vec<RawNumber>,
    partition: Vec<Vec<RawMember>>,
    union_worths: Vec<RawNumber>,
    total: RawNumber,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawGameFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    players: Option<RawPlayers>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coalitions: Option<Vec<RawCoalition>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<Vec<RawMember>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    summary: Option<RawSummary>,
}

/// How a game file specifies its game.
#[derive(Clone, Debug, PartialEq)]
pub enum GameForm<T> {
    Explicit {
        game: ExplicitGame<T>,
        partition: Partition,
    },
    Summary(GameSummary<T>),
}

/// A parsed game file: player labels plus the game in either form.
#[derive(Clone, Debug, PartialEq)]
pub struct GameFile<T> {
    pub labels: Vec<String>,
    pub form: GameForm<T>,
}

fn field_err(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{field}: {msg}"))
}

fn number<T: Scalar>(raw: &RawNumber, field: &str) -> Result<T> {
    let text = match raw {
        RawNumber::Number(n) => n.to_string(),
        RawNumber::Text(s) => s.clone(),
    };
    parse_scalar(&text).ok_or_else(|| field_err(field, format!("`{text}` is not a number")))
}

fn numbers<T: Scalar>(raw: &[RawNumber], field: &str) -> Result<Vec<T>> {
    raw.iter()
        .enumerate()
        .map(|(i, r)| number(r, &format!("{field}[{i}]")))
        .collect()
}

struct Players {
    labels: Vec<String>,
}

impl Players {
    fn from_raw(raw: &RawPlayers) -> Result<Self> {
        let labels = match raw {
            RawPlayers::Count(0) => return Err(field_err("players", "at least one player is required")),
            RawPlayers::Count(n) => (0..*n).map(|i| i.to_string()).collect(),
            RawPlayers::Labels(labels) => {
                if labels.is_empty() {
                    return Err(field_err("players", "at least one player is required"));
                }
                let mut seen = HashSet::new();
                for (i, l) in labels.iter().enumerate() {
                    if l.trim().is_empty() {
                        return Err(field_err(&format!("players[{i}]"), "empty label"));
                    }
                    if !seen.insert(l) {
                        return Err(field_err(&format!("players[{i}]"), format!("duplicate label `{l}`")));
                    }
                }
                labels.clone()
            }
        };
        Ok(Players { labels })
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn resolve(&self, m: &RawMember, field: &str) -> Result<usize> {
        match m {
            RawMember::Index(i) if *i < self.n() => Ok(*i),
            RawMember::Index(i) => Err(field_err(field, format!("player {i} out of range for {} players", self.n()))),
            RawMember::Label(l) => self
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| field_err(field, format!("unknown player `{l}`"))),
        }
    }

    fn partition(&self, raw: &[Vec<RawMember>], field: &str) -> Result<Partition> {
        let unions = raw
            .iter()
            .enumerate()
            .map(|(k, members)| {
                let mut union = members
                    .iter()
                    .enumerate()
                    .map(|(j, m)| self.resolve(m, &format!("{field}[{k}][{j}]")))
                    .collect::<Result<Vec<_>>>()?;
                union.sort_unstable();
                Ok(union)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(self.n(), unions).map_err(|e| field_err(field, e))
    }
}

impl<T: Scalar> GameFile<T> {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGameFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        match (&raw.coalitions, &raw.summary) {
            (Some(_), Some(_)) => Err(field_err("summary", "a file lists either coalitions or a summary, not both")),
            (None, None) => Err(Error::Parse("the file needs `coalitions` or `summary`".into())),
            (Some(coalitions), None) => Self::explicit(&raw, coalitions),
            (None, Some(summary)) => Self::summary_form(&raw, summary),
        }
    }

    fn explicit(raw: &RawGameFile, coalitions: &[RawCoalition]) -> Result<Self> {
        let players = Players::from_raw(
            raw.players
                .as_ref()
                .ok_or_else(|| field_err("players", "required when coalitions are listed"))?,
        )?;
        let n = players.n();
        if n > MAX_EXPLICIT_PLAYERS {
            return Err(field_err(
                "players",
                format!("explicit games support at most {MAX_EXPLICIT_PLAYERS} players; use the summary form"),
            ));
        }
        let mut worths = vec![T::zero(); 1 << n];
        let mut listed = HashSet::new();
        for (c, entry) in coalitions.iter().enumerate() {
            let field = format!("coalitions[{c}]");
            if entry.members.is_empty() {
                return Err(field_err(&field, "the empty coalition cannot be listed"));
            }
            let mut s = Coalition::EMPTY;
            for (j, m) in entry.members.iter().enumerate() {
                let i = players.resolve(m, &format!("{field}.members[{j}]"))?;
                if s.contains(i) {
                    return Err(field_err(&format!("{field}.members[{j}]"), "player listed twice"));
                }
                s = s.with(i);
            }
            if !listed.insert(s) {
                return Err(field_err(&field, format!("coalition {s} listed twice")));
            }
            worths[s.index()] = number(&entry.value, &format!("{field}.value"))?;
        }
        if !listed.contains(&Coalition::grand(n)) {
            return Err(field_err("coalitions", "the grand coalition must be listed"));
        }
        let partition = match &raw.partition {
            Some(p) => players.partition(p, "partition")?,
            None => Partition::singletons(n),
        };
        Ok(GameFile {
            labels: players.labels,
            form: GameForm::Explicit {
                game: ExplicitGame::new(n, worths)?,
                partition,
            },
        })
    }

    fn summary_form(raw: &RawGameFile, s: &RawSummary) -> Result<Self> {
        if raw.partition.is_some() {
            return Err(field_err("partition", "in summary form the partition belongs inside `summary`"));
        }
        let n = s.singletons.len();
        let players = match &raw.players {
            Some(p) => {
                let players = Players::from_raw(p)?;
                if players.n() != n {
                    return Err(field_err(
                        "summary.singletons",
                        format!("{n} entries for {} players", players.n()),
                    ));
                }
                players
            }
            None if n == 0 => return Err(field_err("summary.singletons", "at least one player is required")),
            None => Players {
                labels: (0..n).map(|i| i.to_string()).collect(),
            },
        };
        let partition = players.partition(&s.partition, "summary.partition")?;
        let union_worths = numbers(&s.union_worths, "summary.unionWorths")?;
        if union_worths.len() != partition.m() {
            return Err(field_err(
                "summary.unionWorths",
                format!("{} entries for {} unions", union_worths.len(), partition.m()),
            ));
        }
        let summary = GameSummary::new(
            numbers(&s.singletons, "summary.singletons")?,
            partition,
            union_worths,
            number(&s.total, "summary.total")?,
        )?;
        Ok(GameFile {
            labels: players.labels,
            form: GameForm::Summary(summary),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn partition(&self) -> &Partition {
        match &self.form {
            GameForm::Explicit { partition, .. } => partition,
            GameForm::Summary(s) => s.partition(),
        }
    }

    pub fn total(&self) -> T {
        match &self.form {
            GameForm::Explicit { game, .. } => game.total().clone(),
            GameForm::Summary(s) => s.total().clone(),
        }
    }

    pub fn summary(&self) -> Result<GameSummary<T>> {
        match &self.form {
            GameForm::Explicit { game, partition } => summary_from_explicit(game, partition),
            GameForm::Summary(s) => Ok(s.clone()),
        }
    }

    pub fn solve(&self, value: ValueSpec) -> Result<Allocation<T>> {
        value.on_summary(&self.summary()?)
    }

    /// Writes an explicit game as a game file, listing nonzero worths and
    /// the grand coalition.
    pub fn explicit_json(game: &ExplicitGame<T>, partition: &Partition) -> String {
        let coalitions = game
            .iter()
            .filter(|(s, w)| !s.is_empty() && (!w.is_zero() || *s == game.grand()))
            .map(|(s, w)| RawCoalition {
                members: s.members().map(RawMember::Index).collect(),
                value: to_raw(w),
            })
            .collect();
        let partition = partition
            .unions()
            .iter()
            .map(|u| u.iter().map(|&i| RawMember::Index(i)).collect())
            .collect();
        let raw = RawGameFile {
            players: Some(RawPlayers::Count(game.n())),
            coalitions: Some(coalitions),
            partition: Some(partition),
            summary: None,
        };
        serde_json::to_string_pretty(&raw).expect("game files serialize")
    }
}

/// JSON number when the scalar's text is a plain number, string otherwise.
fn to_raw<T: Scalar>(x: &T) -> RawNumber {
    let text = x.to_string();
    match serde_json::from_str::<Value>(&text) {
        Ok(Value::Number(n)) => RawNumber::Number(n),
        _ => RawNumber::Text(text),
    }
}
