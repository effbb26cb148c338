//! Elevator cost sharing in a building with apartments on several floors.
//!
//! The cost game has one player per apartment (Dutch rule) or one player
//! per quota unit (Spanish rule); the floors are the unions. Only the
//! worths the six values read are defined, so the game is a
//! [`GameSummary`](crate::game::GameSummary).

mod building;
mod tables;

pub use building::{
    aggregate, apartment_shares, elevator_summary, Apartment, ApartmentRef, BuildingSpec, CostModel, Floor,
    QuotaMap, Subjects,
};
pub use tables::{cost_table, reproduce, table_value, CostTable, TableRow, TABLE_IDS};
