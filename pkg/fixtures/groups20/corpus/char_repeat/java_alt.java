static String charRepeat(int n) {
    int k = n > 10 ? 10 : n;
    String out = "";
    for (int i = 0; i < k; i++) {
        out = out + "ab";
    }
    return out;
}
