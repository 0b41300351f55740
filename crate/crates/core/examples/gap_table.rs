//! How much the v-number drops when powers are replaced by their closures.

use monideal::formulas::{gap_instance, vnum_gap_table, CIIdealSpec};
use monideal::instances::{equigenerated_gap_family, non_equigenerated_gap_family};
use monideal::Budget;

fn main() -> monideal::Result<()> {
    for q in 0..=3 {
        for i in [equigenerated_gap_family(q)?, non_equigenerated_gap_family(q as usize)?] {
            let rows = vnum_gap_table(&CIIdealSpec::for_ideal(&i)?, 3, &Budget::unlimited())?;
            let gaps: Vec<String> = rows.iter().map(|r| r.gap.map_or("?".into(), |g| g.to_string())).collect();
            println!("q={q} {i}: gaps {}", gaps.join(" "));
        }
    }
    for a in 1..=3 {
        let g = gap_instance(a)?;
        println!(
            "a={a} {}: v = {}, cited reg = {}, reg - v = {}",
            g.ideal(),
            g.predicted_v(1)?.value.unwrap(),
            g.predicted_reg(1).value.unwrap(),
            g.predicted_gap()
        );
    }
    Ok(())
}
