//! File formats: game files in, tables out.
//!
//! Game files are JSON. An explicit game lists its players and the nonzero
//! worths; a summary lists only singleton worths, the partition, the union
//! worths and the total. Tables render as aligned text, CSV, or JSON that
//! parses back into the same table.

mod gamefile;
mod table;

pub use gamefile::{GameFile, GameForm};
pub use table::{format4, Column, OutputTable, RenderMode, RowKey};
