static String charRepeat(int n) {
    int k = n;
    if (k < 0) {
        k = 0;
    }
    if (k > 10) {
        k = 10;
    }
    StringBuilder text = new StringBuilder();
    for (int i = 0; i < k; i++) {
        text.append("ab");
    }
    return text.toString();
}
