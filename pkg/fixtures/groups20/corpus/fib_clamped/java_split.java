static int clampForty(int k) {
    return k > 40 ? 40 : k;
}

static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int a = 0;
    int b = 1;
    for (int i = 0; i < clampForty(n); i++) {
        int next = a + b;
        a = b;
        b = next;
    }
    return a;
}
