static int halve(int k) {
    return k >> 1;
}

static int binaryOnes(int n) {
    int count = 0;
    int k = n;
    while (k > 0) {
        count += k & 1;
        k = halve(k);
    }
    return count;
}
