import java.util.ArrayList;
import java.util.List;

static List<Integer> evensList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    int i = 0;
    while (i < n) {
        found.add(i);
        i += 2;
    }
    return found;
}
