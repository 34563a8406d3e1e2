//! Completed structure-constant tables against checked-in JSON. Set
//! `UPDATE_GOLDEN=1` to rewrite the files after an intended change.

use std::path::PathBuf;

use min3gen::dihedral_algebra::{algebra_table, dump, AlgebraType};

fn golden_path(ty: AlgebraType) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("dihedral_{ty}.json"))
}

fn rendered(ty: AlgebraType) -> String {
    let mut s = serde_json::to_string_pretty(&dump(&algebra_table(ty).unwrap())).unwrap();
    s.push('\n');
    s
}

#[test]
fn tables_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for ty in AlgebraType::ALL {
        let path = golden_path(ty);
        let now = rendered(ty);
        if update {
            std::fs::write(&path, &now).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(now, want, "{ty} differs from {}", path.display());
    }
}

#[test]
fn golden_files_carry_printed_values() {
    // A few published entries, read straight from the JSON.
    let load = |ty: AlgebraType| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(golden_path(ty)).unwrap()).unwrap()
    };
    let product = |v: &serde_json::Value, i: u64, j: u64| -> Vec<String> {
        let p = v["products"].as_array().unwrap().iter().find(|p| p[0] == i && p[1] == j).unwrap();
        p[2].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
    };
    let a = load(AlgebraType::T2A);
    assert_eq!(a["schema"], 1);
    assert_eq!(product(&a, 0, 1), ["1/8", "1/8", "-1/8"]);
    assert_eq!(a["gram"][0][1], "1/8");
    let b = load(AlgebraType::T2B);
    assert_eq!(product(&b, 0, 1), ["0/1", "0/1"]);
    assert_eq!(b["gram"][0][1], "0/1");
    for ty in AlgebraType::ALL {
        let v = load(ty);
        assert_eq!(v["m1_violations"], 0, "{ty}");
        assert_eq!(v["basis"].as_array().unwrap().len(), ty.dimension(), "{ty}");
    }
}
