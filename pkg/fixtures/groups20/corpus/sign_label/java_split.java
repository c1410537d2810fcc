static int signOf(int k) {
    if (k < 0) {
        return -1;
    }
    if (k == 0) {
        return 0;
    }
    return 1;
}

static String signLabel(int n) {
    int s = signOf(n);
    if (s < 0) {
        return "negative";
    }
    if (s == 0) {
        return "zero";
    }
    return "positive";
}
