use wchars::{CharError, Group};

#[test]
fn tampered_table_is_rejected() {
    let dir = std::env::temp_dir().join(format!("weylkit-checksum-{}", std::process::id()));
    std::fs::create_dir_all(dir.join("tables")).unwrap();
    let src = std::fs::read_to_string(wchars::bundled::path("H3")).unwrap();
    std::fs::write(dir.join("tables/H3.json"), src.replacen("\"-1\"", "\"1\"", 1)).unwrap();
    std::env::set_var("WEYLKIT_DATA", &dir);
    let err = Group::new("H3").unwrap_err();
    assert!(matches!(err, CharError::Data(ref m) if m.contains("checksum")), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}
