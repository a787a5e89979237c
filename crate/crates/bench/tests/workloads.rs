use shoda_bench::{configurations, workloads};
use shoda_core::search;
use shoda_core::shoda::idempotent_set;

#[test]
fn configurations_agree_on_every_workload() {
    for (name, g) in workloads() {
        let mut sets = configurations().into_iter().map(|(_, strategy, mut opts)| {
            opts.collect_idempotents = true;
            let r = search(&g, strategy, &opts).unwrap();
            idempotent_set(r.idempotents.as_deref().unwrap())
        });
        let first = sets.next().unwrap();
        assert!(sets.all(|s| s == first), "{name}");
    }
}
