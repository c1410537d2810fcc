static int lowestBitCleared(int k) {
    return k & (k - 1);
}

static boolean powerOfTwo(int n) {
    return n > 0 && lowestBitCleared(n) == 0;
}
