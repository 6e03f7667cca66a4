//! Exhaustive homeomorphism checks over small enumerated spaces.

use fintop::axioms::all_axioms;
use fintop::maps::enumerate_maps;
use fintop::{enumerate_topologies, AxiomId, Bespoke, PointMap, SpaceAnalysis};

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct TransferStats {
    pub pairs: u64,
    pub bijections: u64,
    pub homeomorphisms: u64,
    pub tb_sources: u64,
    pub td_sources: u64,
}

/// For every pair of spaces on the same n ≤ `n_max` points and every homeomorphism
/// between them: H*-Tb and H*-Td transfer from source to target, and every axiom
/// (all templates × classes plus the bespoke ones) takes the same value on both.
pub fn homeomorphism_transfer(n_max: usize) -> Result<TransferStats, String> {
    let axioms = all_axioms();
    let tb = AxiomId::Bespoke(Bespoke::HStarTb);
    let td = AxiomId::Bespoke(Bespoke::HStarTd);
    let mut st = TransferStats::default();
    for n in 1..=n_max {
        let spaces: Vec<SpaceAnalysis> = enumerate_topologies(n)
            .unwrap()
            .map(SpaceAnalysis::new)
            .collect();
        let values: Vec<Vec<bool>> = spaces
            .iter()
            .map(|s| axioms.iter().map(|a| a.holds(s)).collect())
            .collect();
        for (i, src) in spaces.iter().enumerate() {
            for (j, tgt) in spaces.iter().enumerate() {
                st.pairs += 1;
                for f in enumerate_maps(src.space(), tgt.space(), true).unwrap() {
                    st.bijections += 1;
                    let map = PointMap::new(src, tgt, &f).unwrap();
                    if !map.is_homeomorphism() {
                        continue;
                    }
                    st.homeomorphisms += 1;
                    for (k, a) in axioms.iter().enumerate() {
                        if values[i][k] != values[j][k] {
                            return Err(format!(
                                "{} differs across homeomorphism {f:?}: {} vs {}",
                                a.name(),
                                src.space(),
                                tgt.space()
                            ));
                        }
                    }
                    if tb.holds(src) {
                        st.tb_sources += 1;
                        if !tb.holds(tgt) {
                            return Err(format!("H*-Tb lost under {f:?}"));
                        }
                    }
                    if td.holds(src) {
                        st.td_sources += 1;
                        if !td.holds(tgt) {
                            return Err(format!("H*-Td lost under {f:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok(st)
}
