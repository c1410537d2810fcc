static int clampCount(int k) {
    if (k < 0) {
        return 0;
    }
    if (k > 10) {
        return 10;
    }
    return k;
}

static String charRepeat(int n) {
    StringBuilder text = new StringBuilder();
    for (int i = 0; i < clampCount(n); i++) {
        text.append("ab");
    }
    return text.toString();
}
