static int gcdTwelve(int n) {
    int a = n < 0 ? -n : n;
    int b = 12;
    int r = a % b;
    while (r != 0) {
        a = b;
        b = r;
        r = a % b;
    }
    return b;
}
