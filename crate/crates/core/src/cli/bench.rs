//! `symmpol bench`: wall-clock timing of enumeration and Hall–Littlewood.

use std::time::Instant;

use clap::ValueEnum;

use crate::partitions::{AscendingPartitions, YoungDiagram};
use crate::symfun::{hall_littlewood_with_stats, AlphabetContext};

pub const MAX_PARTITION_SIZE: usize = 80;
pub const HALL_LITTLEWOOD_VARS: std::ops::RangeInclusive<usize> = 3..=8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchTarget {
    Partitions,
    #[value(name = "hall-littlewood")]
    HallLittlewood,
}

pub fn run(target: BenchTarget, size: usize, csv: bool) -> Result<String, String> {
    match target {
        BenchTarget::Partitions => {
            if size > MAX_PARTITION_SIZE {
                return Err(format!(
                    "bench partitions size {size} exceeds the limit of {MAX_PARTITION_SIZE}"
                ));
            }
            let start = Instant::now();
            let mut generator = AscendingPartitions::new(size);
            let mut count: u64 = 0;
            while generator.next_ascending().is_some() {
                count += 1;
            }
            let secs = start.elapsed().as_secs_f64();
            Ok(if csv {
                format!("target,size,items,seconds\npartitions,{size},{count},{secs:.6}\n")
            } else {
                format!("partitions n={size}: {count} partitions generated in {secs:.6} s\n")
            })
        }
        BenchTarget::HallLittlewood => {
            if !HALL_LITTLEWOOD_VARS.contains(&size) {
                return Err(format!(
                    "bench hall-littlewood needs 3 <= N <= 8 variables, got {size}"
                ));
            }
            let lam = YoungDiagram::from_unsorted(vec![3, 2, 1]);
            let ctx = AlphabetContext::new(size).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let (p, stats) = hall_littlewood_with_stats(&lam, &ctx).map_err(|e| e.to_string())?;
            let secs = start.elapsed().as_secs_f64();
            Ok(if csv {
                format!(
                    "target,size,items,alternants,result_terms,seconds\n\
                     hall-littlewood,{size},{},{},{},{secs:.6}\n",
                    stats.permutations,
                    stats.alternants,
                    p.len()
                )
            } else {
                format!(
                    "hall-littlewood lambda={lam} N={size}: {} permutation terms summed per alternant, \
                     {} alternants, {} result terms in {secs:.6} s\n",
                    stats.permutations,
                    stats.alternants,
                    p.len()
                )
            })
        }
    }
}
