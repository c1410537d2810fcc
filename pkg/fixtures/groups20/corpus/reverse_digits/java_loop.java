static int reverseDigits(int n) {
    int m = n < 0 ? -n : n;
    int rev = 0;
    while (m > 0) {
        rev = rev * 10 + m % 10;
        m = m / 10;
    }
    return n < 0 ? -rev : rev;
}
