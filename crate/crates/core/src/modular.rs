//! k-modular diagrams: each part written as its residue mod `k` on top of
//! `floor(part / k)` cells worth `k` each.

use serde::Serialize;

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Column {
    pub quotient: u64,
    /// Always in `0..k`. A zero residue is only displayed as `k` by the renderer.
    pub residue: u64,
}

impl Column {
    pub fn value(&self, k: u64) -> u64 {
        self.quotient * k + self.residue
    }

    /// Cells from top to bottom as displayed.
    fn cells(&self, k: u64) -> impl Iterator<Item = u64> {
        let top = (self.residue != 0).then_some(self.residue);
        top.into_iter()
            .chain(std::iter::repeat_n(k, self.quotient as usize))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KModularDiagram {
    pub k: u64,
    pub columns: Vec<Column>,
}

impl KModularDiagram {
    pub fn new(p: &Partition, k: u64) -> Self {
        assert!(k >= 1, "modulus must be positive");
        let columns = p
            .parts()
            .iter()
            .map(|&part| Column {
                quotient: part / k,
                residue: part % k,
            })
            .collect();
        KModularDiagram { k, columns }
    }

    /// Reassembles the partition from its columns.
    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u64> = self.columns.iter().map(|c| c.value(self.k)).collect();
        let weight = parts.iter().sum();
        Partition::from_sorted_unchecked(parts, weight)
    }

    /// Displayed cells as rows of optional entries, top row first. Row `r`
    /// has one slot per column; `None` marks an empty slot.
    pub fn grid(&self) -> Vec<Vec<Option<u64>>> {
        let columns: Vec<Vec<u64>> = self
            .columns
            .iter()
            .map(|c| c.cells(self.k).collect())
            .collect();
        let height = columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..height)
            .map(|r| columns.iter().map(|col| col.get(r).copied()).collect())
            .collect()
    }

    /// Text grid with one column per part, cells right-aligned to the widest
    /// entry and separated by a single space. Trailing blanks are trimmed.
    pub fn render_text(&self) -> String {
        let grid = self.grid();
        let width = grid
            .iter()
            .flatten()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(0);
        grid.iter()
            .map(|row| {
                let line = row
                    .iter()
                    .map(|cell| match cell {
                        Some(v) => format!("{v:>width$}"),
                        None => " ".repeat(width),
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                line.trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn k_modular_diagram(p: &Partition, k: u64) -> KModularDiagram {
    KModularDiagram::new(p, k)
}
