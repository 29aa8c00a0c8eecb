//! CSV tables for Wigner functions and momentum distributions.

use std::io::Write;

use qudit_pt::{MomentumJpd, Particles, WignerTable};

use crate::CliError;

/// Columns `q,p,w` or `q1,q2,p1,p2,w`, rows in lexicographic label order.
pub fn write_wigner<W: Write>(table: &WignerTable, out: W) -> Result<(), CliError> {
    let mut wtr = csv::Writer::from_writer(out);
    let size = table.n.get();
    match table.particles {
        Particles::One => {
            wtr.write_record(["q", "p", "w"])?;
            for q in 0..size {
                for p in 0..size {
                    wtr.serialize((q, p, table.get(q, p)))?;
                }
            }
        }
        Particles::Two => {
            wtr.write_record(["q1", "q2", "p1", "p2", "w"])?;
            for (k, w) in table.values.iter().enumerate() {
                let p2 = k % size;
                let p1 = (k / size) % size;
                let q2 = (k / (size * size)) % size;
                let q1 = k / (size * size * size);
                wtr.serialize((q1, q2, p1, p2, w))?;
            }
        }
    }
    wtr.flush().map_err(CliError::Output)
}

/// Columns `p,prob` or `p1,p2,prob`.
pub fn write_jpd<W: Write>(jpd: &MomentumJpd, out: W) -> Result<(), CliError> {
    let mut wtr = csv::Writer::from_writer(out);
    let size = jpd.n.get();
    match jpd.particles {
        Particles::One => {
            wtr.write_record(["p", "prob"])?;
            for (p, prob) in jpd.probs.iter().enumerate() {
                wtr.serialize((p, prob))?;
            }
        }
        Particles::Two => {
            wtr.write_record(["p1", "p2", "prob"])?;
            for (k, prob) in jpd.probs.iter().enumerate() {
                wtr.serialize((k / size, k % size, prob))?;
            }
        }
    }
    wtr.flush().map_err(CliError::Output)
}
