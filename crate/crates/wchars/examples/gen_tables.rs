//! Regenerates `data/tables/*.json` and prints their digests.

fn main() {
    let dir = wchars::data_dir().join("tables");
    std::fs::create_dir_all(&dir).expect("create data dir");
    for name in ["D4", "H3", "F4"] {
        let file = wchars::bundled::generate(name).expect("table");
        let text = serde_json::to_string_pretty(&file).expect("json") + "\n";
        std::fs::write(wchars::bundled::path(name), &text).expect("write");
        println!("{name} {}", wchars::bundled::digest(text.as_bytes()));
    }
}
