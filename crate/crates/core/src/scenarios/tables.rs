use super::building::{apartment_shares, BuildingSpec, Subjects};
use crate::error::{Error, Result};
use crate::game::Allocation;
use crate::scalar::Scalar;
use crate::values::ValueKind;

/// One apartment's shares under both rules.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow<T> {
    pub floor: String,
    pub apartment: String,
    pub dutch: T,
    pub spanish: T,
}

/// A cost distribution of the three-storey building under one value.
#[derive(Clone, Debug, PartialEq)]
pub struct CostTable<T> {
    pub id: u8,
    pub title: String,
    pub value: ValueKind,
    pub rows: Vec<TableRow<T>>,
    pub dutch_total: T,
    pub spanish_total: T,
    pub footnotes: Vec<String>,
}

pub const TABLE_IDS: [u8; 6] = [1, 2, 3, 4, 5, 6];

/// The value behind each reproduced table.
pub fn table_value(id: u8) -> Result<ValueKind> {
    match id {
        1 => Ok(ValueKind::Ed),
        2 => Ok(ValueKind::Edu),
        3 => Ok(ValueKind::Esd),
        4 => Ok(ValueKind::Esd1u),
        5 => Ok(ValueKind::Esd2u),
        6 => Ok(ValueKind::Esd3u),
        _ => Err(Error::Config(format!("no table {id}; tables are numbered 1 to 6"))),
    }
}

fn title(kind: ValueKind) -> &'static str {
    match kind {
        ValueKind::Ed => "Distribution according to the Dutch and Spanish rules",
        ValueKind::Edu => "Distribution according to the two-step Dutch and Spanish rules",
        ValueKind::Esd => "Distribution according to the ES-Dutch and ES-Spanish rules",
        ValueKind::Esd1u => "Distribution according to ESD1^U",
        ValueKind::Esd2u => "Distribution according to ESD2^U",
        ValueKind::Esd3u => "Distribution according to ESD3^U",
    }
}

fn footnotes(kind: ValueKind) -> Vec<String> {
    match kind {
        ValueKind::Esd => vec![
            "The published Spanish column (613.0860, 21.8100, 19.6290, -1760.7240) deviates from the exact values \
             by up to 0.01; the figures above are exact."
                .into(),
        ],
        ValueKind::Esd1u | ValueKind::Esd2u => vec![
            "The published Spanish figures for the 2nd floor (21.0584, 18.9525) deviate from the exact values \
             400/19 and 360/19 by at most 0.006; the figures above are exact."
                .into(),
        ],
        _ => Vec::new(),
    }
}

/// Builds a table for `spec`; ids 1 to 6 select ED, ED^U, ESD, ESD1^U,
/// ESD2^U and ESD3^U.
pub fn cost_table<T: Scalar>(spec: &BuildingSpec, id: u8) -> Result<CostTable<T>> {
    let kind = table_value(id)?;
    let dutch: Allocation<T> = apartment_shares(spec, Subjects::Apartments, kind)?;
    let spanish: Allocation<T> = apartment_shares(spec, Subjects::QuotaUnits, kind)?;
    let rows = spec
        .apartments()
        .into_iter()
        .enumerate()
        .map(|(a, apt)| TableRow {
            floor: apt.floor_label,
            apartment: apt.label,
            dutch: dutch[a].clone(),
            spanish: spanish[a].clone(),
        })
        .collect();
    let is_default = *spec == BuildingSpec::three_storey();
    Ok(CostTable {
        id,
        title: title(kind).to_string(),
        value: kind,
        rows,
        dutch_total: dutch.total(),
        spanish_total: spanish.total(),
        footnotes: if is_default { footnotes(kind) } else { Vec::new() },
    })
}

/// A table of the three-storey building.
pub fn reproduce<T: Scalar>(id: u8) -> Result<CostTable<T>> {
    cost_table(&BuildingSpec::three_storey(), id)
}
