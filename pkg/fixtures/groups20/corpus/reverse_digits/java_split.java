static int stripSign(int k) {
    return Math.abs(k);
}

static int reverseDigits(int n) {
    int m = stripSign(n);
    int rev = 0;
    while (m > 0) {
        rev = rev * 10 + m % 10;
        m = m / 10;
    }
    if (n < 0) {
        return -rev;
    }
    return rev;
}
