static String signLabel(int n) {
    return n < 0 ? "negative" : (n == 0 ? "zero" : "positive");
}
