static boolean powerOfTwo(int n) {
    if (n <= 0) {
        return false;
    }
    int ones = 0;
    int k = n;
    while (k > 0) {
        ones += k & 1;
        k = k >> 1;
    }
    return ones == 1;
}
