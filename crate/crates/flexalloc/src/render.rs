//! Gantt-style views of solutions: plain text (one character per time unit
//! and color) and self-contained SVG (10px cells).
//!
//! Contiguous colorings are drawn exactly as assigned. Bandwidth
//! allocations carry no color positions, so they are drawn schematically by
//! stacking active jobs in id order at each time step; the text view says
//! so in a trailing notice.

use std::fmt::Write as _;

use crate::model::{BandwidthAllocation, ContiguousColoring, Instance, JobId};

const CELL: u64 = 10;

/// Row-major occupancy: `grid[color - 1][t]` is the job shown there.
type Grid = Vec<Vec<Option<JobId>>>;

fn horizon(inst: &Instance) -> u64 {
    inst.jobs.iter().map(|j| j.end).max().unwrap_or(0)
}

fn grid_fsap(inst: &Instance, col: &ContiguousColoring) -> Grid {
    let h = horizon(inst) as usize;
    let mut grid = vec![vec![None; h]; inst.capacity as usize];
    for (id, block) in &col.blocks {
        let Some(job) = inst.job(*id) else { continue };
        for c in block.first..=block.last().min(inst.capacity) {
            for t in job.start..job.end {
                grid[c as usize - 1][t as usize] = Some(*id);
            }
        }
    }
    grid
}

fn grid_fba(inst: &Instance, alloc: &BandwidthAllocation) -> Grid {
    let h = horizon(inst) as usize;
    let mut grid = vec![vec![None; h]; inst.capacity as usize];
    for t in 0..h as u64 {
        let mut row = 0usize;
        for job in &inst.jobs {
            if !job.contains(t) {
                continue;
            }
            let a = alloc.amount(job.id);
            for _ in 0..a {
                if row >= grid.len() {
                    break;
                }
                grid[row][t as usize] = Some(job.id);
                row += 1;
            }
        }
    }
    grid
}

fn label(id: JobId) -> char {
    char::from_digit((id % 36) as u32, 36).unwrap()
}

fn ascii_from_grid(grid: &Grid) -> String {
    let mut out = String::new();
    if grid.is_empty() || grid[0].is_empty() {
        out.push_str("(empty)\n");
        return out;
    }
    let w = grid.len();
    for color in (1..=w).rev() {
        let _ = write!(out, "{color:>4} |");
        for cell in &grid[color - 1] {
            out.push(cell.map_or('.', label));
        }
        out.push('\n');
    }
    let cols = grid[0].len();
    let _ = write!(out, "     +{}", "-".repeat(cols));
    out.push('\n');
    let mut ticks = String::new();
    let mut t = 0;
    while t < cols {
        let _ = write!(ticks, "{t:<10}");
        t += 10;
    }
    ticks.truncate(cols);
    let _ = writeln!(out, "      {ticks}");
    out
}

fn svg_from_grid(grid: &Grid) -> String {
    let w = grid.len() as u64;
    let cols = grid.first().map_or(0, |r| r.len()) as u64;
    let width = cols * CELL + 2;
    let height = w * CELL + 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\" \
         stroke=\"#888888\"/>"
    );
    for (ci, row) in grid.iter().enumerate() {
        // Merge equal neighbours into one box per run.
        let y = (w - 1 - ci as u64) * CELL + 1;
        let mut t = 0usize;
        while t < row.len() {
            let Some(id) = row[t] else {
                t += 1;
                continue;
            };
            let start = t;
            while t < row.len() && row[t] == Some(id) {
                t += 1;
            }
            let x = start as u64 * CELL + 1;
            let run = (t - start) as u64 * CELL;
            let hue = (id * 61) % 360;
            let _ = writeln!(
                out,
                "<rect x=\"{x}\" y=\"{y}\" width=\"{run}\" height=\"{CELL}\" \
                 fill=\"hsl({hue},65%,75%)\" stroke=\"#444444\"/>"
            );
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"8\" \
                 text-anchor=\"middle\">{}</text>",
                x + run / 2,
                y + 8,
                label(id)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_ascii_fsap(inst: &Instance, col: &ContiguousColoring) -> String {
    ascii_from_grid(&grid_fsap(inst, col))
}

pub fn render_ascii_fba(inst: &Instance, alloc: &BandwidthAllocation) -> String {
    let mut out = ascii_from_grid(&grid_fba(inst, alloc));
    out.push_str("note: rows are schematic; amounts are stacked in id order, not assigned colors\n");
    out
}

pub fn render_svg_fsap(inst: &Instance, col: &ContiguousColoring) -> String {
    svg_from_grid(&grid_fsap(inst, col))
}

pub fn render_svg_fba(inst: &Instance, alloc: &BandwidthAllocation) -> String {
    svg_from_grid(&grid_fba(inst, alloc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Block, Job};
    use std::collections::BTreeMap;

    fn two_job_instance() -> Instance {
        Instance::new(
            3,
            vec![
                Job { id: 1, start: 0, end: 2, rmin: 0, rmax: 2, profit: 1 },
                Job { id: 2, start: 1, end: 4, rmin: 0, rmax: 1, profit: 1 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn ascii_grid_shows_blocks() {
        let inst = two_job_instance();
        let col = ContiguousColoring {
            blocks: BTreeMap::from([
                (1, Block { first: 1, len: 2 }),
                (2, Block { first: 3, len: 1 }),
            ]),
        };
        let text = render_ascii_fsap(&inst, &col);
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "   3 |.222");
        assert_eq!(rows[1], "   2 |11..");
        assert_eq!(rows[2], "   1 |11..");
    }

    #[test]
    fn ascii_bandwidth_stacks_and_warns() {
        let inst = two_job_instance();
        let alloc = BandwidthAllocation {
            amounts: BTreeMap::from([(1, 2), (2, 1)]),
        };
        let text = render_ascii_fba(&inst, &alloc);
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "   3 |.2..");
        assert_eq!(rows[1], "   2 |11..");
        assert_eq!(rows[2], "   1 |1122");
        assert!(text.contains("schematic"));
    }

    #[test]
    fn empty_solution_renders_dots() {
        let inst = two_job_instance();
        let col = ContiguousColoring { blocks: BTreeMap::new() };
        let text = render_ascii_fsap(&inst, &col);
        assert!(text.starts_with("   3 |....\n"));
    }

    #[test]
    fn svg_is_self_contained() {
        let inst = two_job_instance();
        let col = ContiguousColoring {
            blocks: BTreeMap::from([(1, Block { first: 1, len: 2 })]),
        };
        let svg = render_svg_fsap(&inst, &col);
        assert!(svg.starts_with("<svg xmlns="));
        assert!(svg.trim_end().ends_with("</svg>"));
        // Job 1 spans two colors and two time units: two merged 20px boxes.
        assert_eq!(svg.matches("width=\"20\" height=\"10\"").count(), 2);
        // No external references beyond the namespace declaration.
        assert_eq!(svg.matches("http").count(), 1);
    }

    #[test]
    fn empty_instance_is_flagged() {
        let inst = Instance::new(2, vec![]).unwrap();
        let col = ContiguousColoring { blocks: BTreeMap::new() };
        assert_eq!(render_ascii_fsap(&inst, &col), "(empty)\n");
    }
}
