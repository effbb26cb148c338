use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::game::{Allocation, GameSummary, Partition};
use crate::scalar::{parse_scalar, Scalar};
use crate::values::ValueKind;

/// Elevator installation costs. Every floor's stand-alone cost is the
/// machine, its own access works and its tier of the hollow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CostModel {
    pub machine_cost: Number,
    pub hollow_fixed: Number,
    /// Hollow cost charged to the lowest floor on top of the fixed part.
    pub hollow_base: Number,
    pub hollow_increment_per_floor: Number,
    pub access_per_floor: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Apartment {
    pub label: String,
    /// Quota units owned by the apartment; must be a positive integer.
    pub surface: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Floor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub apartments: Vec<Apartment>,
}

/// A building, floors listed bottom to top.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct BuildingSpec {
    pub floors: Vec<Floor>,
    pub cost_model: CostModel,
    /// Defaults to the machine, the whole hollow and every floor's access.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_cost: Option<Number>,
}

/// Who the equal shares go to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subjects {
    /// One player per apartment.
    Apartments,
    /// One player per quota unit.
    QuotaUnits,
}

/// One apartment in player order, top floor first.
#[derive(Clone, Debug, PartialEq)]
pub struct ApartmentRef {
    /// Index into [`BuildingSpec::floors`].
    pub floor: usize,
    pub floor_label: String,
    pub label: String,
    pub units: usize,
}

/// Which quota units belong to which apartment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotaMap {
    units: Vec<usize>,
    owner: Vec<usize>,
}

impl QuotaMap {
    /// Units are numbered consecutively, apartment by apartment.
    pub fn new(units: Vec<usize>) -> Result<Self> {
        if units.contains(&0) {
            return Err(Error::Spec("every apartment needs at least one quota unit".into()));
        }
        let owner = units
            .iter()
            .enumerate()
            .flat_map(|(a, &u)| std::iter::repeat_n(a, u))
            .collect();
        Ok(QuotaMap { units, owner })
    }

    pub fn apartments(&self) -> usize {
        self.units.len()
    }

    pub fn total_units(&self) -> usize {
        self.owner.len()
    }

    pub fn units(&self, apartment: usize) -> usize {
        self.units[apartment]
    }

    pub fn owner(&self, unit: usize) -> usize {
        self.owner[unit]
    }
}

fn ordinal(level: usize) -> String {
    let suffix = match (level % 10, level % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{level}{suffix} floor")
}

fn amount<T: Scalar>(n: &Number, field: &str) -> Result<T> {
    parse_scalar(&n.to_string()).ok_or_else(|| Error::Spec(format!("{field}: `{n}` is not a number")))
}

impl BuildingSpec {
    /// Three residential floors: one apartment of 180 m² on the first,
    /// 100 and 90 m² on the second, three of 60 m² on the third, with an
    /// installation cost of 120.
    pub fn three_storey() -> Self {
        let apt = |label: &str, surface: u64| Apartment {
            label: label.to_string(),
            surface: surface.into(),
        };
        let floor = |apartments| Floor {
            label: None,
            apartments,
        };
        BuildingSpec {
            floors: vec![
                floor(vec![apt("1A", 180)]),
                floor(vec![apt("2A", 100), apt("2B", 90)]),
                floor(vec![apt("3A", 60), apt("3B", 60), apt("3C", 60)]),
            ],
            cost_model: CostModel {
                machine_cost: 50.into(),
                hollow_fixed: 10.into(),
                hollow_base: 10.into(),
                hollow_increment_per_floor: 10.into(),
                access_per_floor: 10.into(),
            },
            total_cost: Some(120.into()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: BuildingSpec = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("building spec, line {} column {}: {e}", e.line(), e.column())))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("building specs serialize")
    }

    pub fn validate(&self) -> Result<()> {
        if self.floors.iter().all(|f| f.apartments.is_empty()) {
            return Err(Error::Spec("the building has no apartments".into()));
        }
        for (f, floor) in self.floors.iter().enumerate() {
            for apt in &floor.apartments {
                match apt.surface.as_u64() {
                    Some(s) if s > 0 && s <= u32::MAX as u64 => {}
                    _ => {
                        return Err(Error::Spec(format!(
                            "floor {} apartment `{}`: surface {} is not a positive integer",
                            f + 1,
                            apt.label,
                            apt.surface
                        )))
                    }
                }
            }
        }
        self.costs::<f64>()?;
        Ok(())
    }

    pub fn floor_label(&self, floor: usize) -> String {
        self.floors[floor].label.clone().unwrap_or_else(|| ordinal(floor + 1))
    }

    /// Apartments in player order: top floor first, each floor as listed.
    pub fn apartments(&self) -> Vec<ApartmentRef> {
        let mut out = Vec::new();
        for f in (0..self.floors.len()).rev() {
            for apt in &self.floors[f].apartments {
                out.push(ApartmentRef {
                    floor: f,
                    floor_label: self.floor_label(f),
                    label: apt.label.clone(),
                    units: apt.surface.as_u64().unwrap_or(0) as usize,
                });
            }
        }
        out
    }

    pub fn quota_map(&self) -> Result<QuotaMap> {
        self.validate()?;
        QuotaMap::new(self.apartments().iter().map(|a| a.units).collect())
    }

    /// Stand-alone cost of every floor, bottom to top, and the total cost.
    pub fn costs<T: Scalar>(&self) -> Result<(Vec<T>, T)> {
        let c = &self.cost_model;
        let machine: T = amount(&c.machine_cost, "machineCost")?;
        let fixed: T = amount(&c.hollow_fixed, "hollowFixed")?;
        let base: T = amount(&c.hollow_base, "hollowBase")?;
        let inc: T = amount(&c.hollow_increment_per_floor, "hollowIncrementPerFloor")?;
        let access: T = amount(&c.access_per_floor, "accessPerFloor")?;
        let floors = self.floors.len();
        let common = machine + access.clone() + fixed + base;
        let floor_costs = (0..floors)
            .map(|f| common.clone() + inc.clone() * T::from_count(f))
            .collect();
        let total = match &self.total_cost {
            Some(t) => amount(t, "totalCost")?,
            None => {
                let top = floors.saturating_sub(1);
                common + inc * T::from_count(top) + access * T::from_count(floors.saturating_sub(1))
            }
        };
        Ok((floor_costs, total))
    }
}

/// The cost game of `spec`, with the floors as unions.
///
/// Every subject's stand-alone cost, and every floor's, is the cost of
/// serving that floor alone.
pub fn elevator_summary<T: Scalar>(spec: &BuildingSpec, subjects: Subjects) -> Result<GameSummary<T>> {
    spec.validate()?;
    let (floor_costs, total) = spec.costs::<T>()?;
    let mut singleton = Vec::new();
    let mut unions = Vec::new();
    let mut union_worth = Vec::new();
    for f in (0..spec.floors.len()).rev() {
        let floor = &spec.floors[f];
        if floor.apartments.is_empty() {
            continue;
        }
        let start = singleton.len();
        for apt in &floor.apartments {
            let count = match subjects {
                Subjects::Apartments => 1,
                Subjects::QuotaUnits => apt.surface.as_u64().unwrap_or(0) as usize,
            };
            singleton.extend(std::iter::repeat_n(floor_costs[f].clone(), count));
        }
        unions.push((start..singleton.len()).collect());
        union_worth.push(floor_costs[f].clone());
    }
    let partition = Partition::new(singleton.len(), unions)?;
    GameSummary::new(singleton, partition, union_worth, total)
}

/// Sums unit shares into apartment shares.
pub fn aggregate<T: Scalar>(units: &Allocation<T>, q: &QuotaMap) -> Result<Allocation<T>> {
    if units.len() != q.total_units() {
        return Err(Error::SizeMismatch(units.len(), q.total_units()));
    }
    let mut shares = vec![T::zero(); q.apartments()];
    for (u, share) in units.shares().iter().enumerate() {
        let a = q.owner(u);
        shares[a] = shares[a].clone() + share.clone();
    }
    Ok(Allocation::new(shares))
}

/// Per-apartment shares of `kind` with apartments (Dutch rule) or quota
/// units (Spanish rule) as subjects.
pub fn apartment_shares<T: Scalar>(spec: &BuildingSpec, subjects: Subjects, kind: ValueKind) -> Result<Allocation<T>> {
    let summary = elevator_summary::<T>(spec, subjects)?;
    let shares = kind.compute(&summary);
    match subjects {
        Subjects::Apartments => Ok(shares),
        Subjects::QuotaUnits => aggregate(&shares, &spec.quota_map()?),
    }
}
